#pragma once

#include <cstdint>

namespace specgeo {

enum class SpectrumKind { Sphere, Lune, QuotientZk, QuotientDk };
enum class QuotientGroup { Zk, Dk };

struct SpectrumEntry {
  double eigenvalue;
  long multiplicity;
};

/// Explicit eigenvalue stream: entry(i) is the i-th value group in
/// nondecreasing eigenvalue order.
class Spectrum {
 public:
  Spectrum(SpectrumKind kind, int k, double r);

  SpectrumEntry entry(long index) const;
  SpectrumKind kind() const { return kind_; }
  int k() const { return k_; }
  double radius() const { return r_; }

 private:
  SpectrumKind kind_;
  int k_;
  double r_;
};

Spectrum sphere_spectrum(double r);
Spectrum lune_spectrum(int k, double r);
Spectrum quotient_spectrum(QuotientGroup group, int k, double r);

struct TraceValue {
  double t = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
};

/// Partial heat-trace sum. The reported tail_bound is an upper bound on the
/// omitted tail (folding in the float accumulation error), kept below
/// rel_tol * value at termination.
TraceValue heat_trace(const Spectrum& spectrum, double t, double rel_tol,
                      long term_cap = 10000000);

/// Brute-force dimension of the G-invariant subspace of degree-l spherical
/// harmonics, G the cyclic or dihedral group of parameter k, by numerically
/// averaging the group action over the 2l+1 basis functions.
long invariant_harmonics_dimension(QuotientGroup group, int k, int l);

}  // namespace specgeo
