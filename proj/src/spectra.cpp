#include "specgeo/spectra.hpp"

#include <cmath>

#include "specgeo/errors.hpp"

namespace specgeo {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

Spectrum::Spectrum(SpectrumKind kind, int k, double r) : kind_(kind), k_(k), r_(r) {
  if (!(r > 0.0)) throw DomainError("Spectrum: radius must be positive");
  if ((kind == SpectrumKind::Lune && k < 1) ||
      ((kind == SpectrumKind::QuotientZk || kind == SpectrumKind::QuotientDk) && k < 2))
    throw DomainError("Spectrum: invalid symmetry order");
}

SpectrumEntry Spectrum::entry(long index) const {
  double r2 = r_ * r_;
  switch (kind_) {
    case SpectrumKind::Sphere: {
      long l = index;
      return {static_cast<double>(l) * (l + 1) / r2, 2 * l + 1};
    }
    case SpectrumKind::Lune: {
      // Eigenvalues N(N+1)/r^2 for N >= k; multiplicity #{(m>=1,n>=0): km+n=N}.
      long n = k_ + index;
      return {static_cast<double>(n) * (n + 1) / r2, n / k_};
    }
    case SpectrumKind::QuotientZk: {
      long l = index;
      return {static_cast<double>(l) * (l + 1) / r2, 2 * (l / k_) + 1};
    }
    case SpectrumKind::QuotientDk: {
      long l = index;
      return {static_cast<double>(l) * (l + 1) / r2, l / k_ + 1};
    }
  }
  throw DomainError("Spectrum: unknown kind");
}

Spectrum sphere_spectrum(double r) { return Spectrum(SpectrumKind::Sphere, 1, r); }

Spectrum lune_spectrum(int k, double r) { return Spectrum(SpectrumKind::Lune, k, r); }

Spectrum quotient_spectrum(QuotientGroup group, int k, double r) {
  return Spectrum(group == QuotientGroup::Zk ? SpectrumKind::QuotientZk
                                             : SpectrumKind::QuotientDk,
                  k, r);
}

TraceValue heat_trace(const Spectrum& spectrum, double t, double rel_tol,
                      long term_cap) {
  if (!(t > 0.0)) throw DomainError("heat_trace: t must be positive");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw DomainError("heat_trace: rel_tol must lie in (0, 1)");

  const double r = spectrum.radius();
  const double tau = t / (r * r);
  // Degree of the value group at stream position i (lune entries start at k).
  auto degree = [&](long i) {
    return spectrum.kind() == SpectrumKind::Lune ? spectrum.k() + i : i;
  };

  long double sum = 0.0L, comp = 0.0L;
  long i = 0;
  for (;; ++i) {
    if (i > term_cap)
      throw NonConvergent("heat_trace: term cap exceeded before tail bound met");
    SpectrumEntry e = spectrum.entry(i);
    long double term =
        static_cast<long double>(e.multiplicity) * expl(-static_cast<long double>(e.eigenvalue) * t);
    long double s2 = sum + term;
    if (fabsl(sum) >= fabsl(term))
      comp += (sum - s2) + term;
    else
      comp += (term - s2) + sum;
    sum = s2;

    // Tail after degree L: sum_{l>L} (2l+1) e^{-l(l+1) tau} <= e^{-L(L+1) tau} (1/tau + 1);
    // multiplicities of every kind here are <= 2l+1 at eigenvalue l(l+1)/r^2.
    long l = degree(i);
    double bound = std::exp(-static_cast<double>(l) * (l + 1) * tau) * (1.0 / tau + 1.0);
    double value = static_cast<double>(sum + comp);
    if (value > 0.0 && bound <= rel_tol * value) {
      // All terms are positive, so 8 eps |S| dominates the accumulated
      // floating-point error of the compensated sum and per-term exp calls;
      // folding it in keeps the certificate a bound on |computed - true|.
      bound += 8.0 * 2.220446049250313e-16 * value;
      return {t, value, bound, i + 1};
    }
  }
}

long invariant_harmonics_dimension(QuotientGroup group, int k, int l) {
  if (k < 2 || l < 0) throw DomainError("invariant_harmonics_dimension: bad arguments");
  // Average the trace of the degree-l representation over the group. A
  // rotation by beta has trace 1 + sum_{m=1}^{l} 2 cos(m beta) on the real
  // harmonic basis {P_l^0, cos(m phi) P_l^m, sin(m phi) P_l^m}; a reflection
  // fixes the cosine line and flips the sine line per m, so its trace is 1.
  double acc = 0.0;
  for (int j = 0; j < k; ++j) {
    double beta = 2.0 * kPi * j / k;
    double tr = 1.0;
    for (int m = 1; m <= l; ++m) tr += 2.0 * std::cos(m * beta);
    acc += tr;
  }
  long order = k;
  if (group == QuotientGroup::Dk) {
    acc += k;  // k reflections, trace 1 each
    order = 2 * k;
  }
  double dim = acc / order;
  long rounded = std::lround(dim);
  if (std::abs(dim - rounded) > 1e-6)
    throw NumericalError("invariant_harmonics_dimension: non-integer projection trace");
  return rounded;
}

}  // namespace specgeo
