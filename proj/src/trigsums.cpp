#include "specgeo/trigsums.hpp"

#include <cmath>
#include <vector>

#include "specgeo/errors.hpp"

namespace specgeo {

namespace {
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// Neumaier-compensated sum over long doubles.
struct CompensatedSum {
  long double s = 0.0L, c = 0.0L;
  void add(long double x) {
    long double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  long double total() const { return s + c; }
};
}  // namespace

Rational d_coeff(int k, int eta) {
  if (k < 0 || eta < 0) throw DomainError("d_coeff: negative index");
  if (k > eta) return Rational(0);
  if (k == 0) return eta == 0 ? Rational(1) : Rational(0);
  mpz_class acc(0), power;
  for (int p = 0; p <= k; ++p) {
    mpz_class base(k - 2 * p);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(eta));
    mpz_class term = binomial(k, p) * power;
    if (p % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(k));
  denom *= factorial(eta);
  return Rational(acc, denom);
}

Rational d_coeff_composition(int k, int eta) {
  if (k < 0 || eta < 0) throw DomainError("d_coeff_composition: negative index");
  if (k == 0) return eta == 0 ? Rational(1) : Rational(0);
  // sum over odd l: d_{k-1}(eta - l) / l!
  Rational total(0);
  for (int l = 1; l <= eta; l += 2)
    total += d_coeff_composition(k - 1, eta - l) / Rational(factorial(l));
  return total;
}

double c_ell_c(int ell, double s) {
  if (!(s > 0.0) || s > 1.0) throw DomainError("c_ell_c: s must lie in (0, 1]");
  if (ell < 0) throw DomainError("c_ell_c: ell < 0");
  CompensatedSum acc;
  long double ls = s;
  for (int tau = 0; tau <= ell; ++tau) {
    long double term = static_cast<long double>(binomial_half(tau).to_double());
    if ((ell - tau) % 2 != 0) term = -term;
    term *= powl(ls, -2.0L * (ell - tau) - 2.0L);
    acc.add(term);
  }
  return static_cast<double>(acc.total());
}

double trig_sum_direct(int k, int n) {
  if (k < 2) throw DomainError("trig_sum_direct: k >= 2 required");
  CompensatedSum acc;
  for (int j = 1; j < k; ++j) {
    long double s = sinl(static_cast<long double>(j) * kPiL / k);
    acc.add(powl(s, -2.0L * n));
  }
  return static_cast<double>(acc.total());
}

double identity_residual(int k, int eta) {
  if (k < 2 || eta < 0) throw DomainError("identity_residual: k >= 2, eta >= 0");
  // LHS exactly: sum_{l=1}^{eta+1} C(2eta+2, 2l) B_{2eta-2l+2}(1/2) B_{2l} (k^{2l}-1)
  Rational lhs(0);
  for (int l = 1; l <= eta + 1; ++l)
    lhs += Rational(binomial(2 * eta + 2, 2 * l)) * bernoulli_at_half(2 * eta - 2 * l + 2) *
           bernoulli_number(2 * l) * (Rational(k).pow(2 * l) - Rational(1));

  // RHS: ((2eta+2)!/4^{eta+1}) sum_l C_{l,k} d_{2l}(2eta)
  CompensatedSum rhs;
  for (int l = 0; l <= eta; ++l) {
    Rational d = d_coeff(2 * l, 2 * eta);
    if (d.is_zero()) continue;
    CompensatedSum cl;
    for (int tau = 0; tau <= l; ++tau) {
      CompensatedSum sines;
      for (int j = 1; j < k; ++j) {
        long double s = sinl(static_cast<long double>(j) * kPiL / k);
        sines.add(powl(s, -2.0L * (l - tau) - 2.0L));
      }
      long double term = static_cast<long double>(binomial_half(tau).to_double()) * sines.total();
      if ((l - tau) % 2 != 0) term = -term;
      cl.add(term);
    }
    rhs.add(cl.total() * static_cast<long double>(d.to_double()));
  }
  long double scale = static_cast<long double>(
      (Rational(factorial(2 * eta + 2)) / Rational(4).pow(eta + 1)).to_double());
  long double rhs_value = scale * rhs.total();
  long double lhs_value = static_cast<long double>(lhs.to_double());
  long double denom = std::max(1.0L, fabsl(lhs_value));
  return static_cast<double>(fabsl(lhs_value - rhs_value) / denom);
}

Rational closed_sum(int n, int k) {
  if (k < 2) throw DomainError("closed_sum: k >= 2 required");
  Rational k2 = Rational(k) * Rational(k);
  Rational k4 = k2 * k2;
  Rational k6 = k4 * k2;
  switch (n) {
    case 1:
      return (k2 - Rational(1)) / Rational(3);
    case 2:
      return (k4 - Rational(1)) / Rational(45) + Rational(2, 9) * (k2 - Rational(1));
    case 3:
      return Rational(2, 945) * (k6 - Rational(1)) + (k4 - Rational(1)) / Rational(45) +
             Rational(8, 45) * (k2 - Rational(1));
    default:
      throw UnsupportedPower("closed_sum: only n in {1,2,3} have closed forms here");
  }
}

}  // namespace specgeo
