#include "specgeo/invariants.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <vector>

#include "specgeo/errors.hpp"

namespace specgeo {

namespace {

// c_l^H(gamma) = sum_{j=1}^{l+1} C(2l+2,2j) B_{2l-2j+2}(1/2) B_{2j}
//                / (4 (l+1)! (2l+1)) * w_j(gamma),
// with w_j(gamma) = (pi^{2j} - gamma^{2j}) / (pi gamma^{2j-1}).
// The Bernoulli-weight factor in front of w_j:
Rational hyper_vertex_weight(int ell, int j) {
  return Rational(binomial(2 * ell + 2, 2 * j)) * bernoulli_at_half(2 * ell - 2 * j + 2) *
         bernoulli_number(2 * j) /
         (Rational(4) * Rational(factorial(ell + 1)) * Rational(2 * ell + 1));
}

// w_j for an exact angle (p/q) pi: (1 - (p/q)^{2j}) (q/p)^{2j-1}, rational.
Rational w_exact(int j, const Rational& pq) {
  return (Rational(1) - pq.pow(2 * j)) * pq.pow(1 - 2 * j);
}

// High-precision evaluation of sum_j weight_j * w_j(gamma) for float gamma.
// Catastrophic cancellation in pi^{2j} - gamma^{2j} near gamma = pi is tamed
// by 256-bit arithmetic before the final rounding.
double weighted_w_sum_mpfr(const std::vector<Rational>& weights, double gamma) {
  constexpr int kPrec = 256;
  mpfr_t pi, g, acc, w, term, tmp, num;
  mpfr_inits2(kPrec, pi, g, acc, w, term, tmp, num, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_d(g, gamma, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  for (size_t j = 1; j <= weights.size(); ++j) {
    // w_j = (pi^{2j} - g^{2j}) / (pi * g^{2j-1})
    mpfr_pow_si(num, pi, 2 * static_cast<long>(j), MPFR_RNDN);
    mpfr_pow_si(tmp, g, 2 * static_cast<long>(j), MPFR_RNDN);
    mpfr_sub(num, num, tmp, MPFR_RNDN);
    mpfr_pow_si(tmp, g, 2 * static_cast<long>(j) - 1, MPFR_RNDN);
    mpfr_mul(tmp, tmp, pi, MPFR_RNDN);
    mpfr_div(w, num, tmp, MPFR_RNDN);
    mpfr_set_q(term, mpq_class(weights[j - 1].num(), weights[j - 1].den()).get_mpq_t(),
               MPFR_RNDN);
    mpfr_mul(term, term, w, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(pi, g, acc, w, term, tmp, num, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Scalar weighted_w_sum(const std::vector<Rational>& weights, const Angle& gamma) {
  if (gamma.is_exact()) {
    Rational pq = gamma.pi_fraction();
    Rational acc(0);
    for (size_t j = 1; j <= weights.size(); ++j)
      acc += weights[j - 1] * w_exact(static_cast<int>(j), pq);
    return Scalar(acc);
  }
  return Scalar(weighted_w_sum_mpfr(weights, gamma.value()));
}

void require_valid(const std::vector<Violation>& violations) {
  if (!violations.empty())
    throw ValidationError("invalid spec: " + violations.front().code + " (" +
                          violations.front().detail + ")");
}

// Exact and float coefficients never mix within one series.
void float_normalize(AsymptoticSeries* s, bool exact) {
  if (exact) return;
  for (auto& [n, c] : s->coefficients) c = Scalar(c.to_double());
}

}  // namespace

namespace {

// Append-only coefficient tables, same read/append contract as the
// Bernoulli caches: the mutex serializes growth, values are immutable.
class CoefficientTable {
 public:
  template <typename Compute>
  Rational get(int index, const Compute& compute) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(values_.size()) <= index)
      values_.push_back(compute(static_cast<int>(values_.size())));
    return values_[index];
  }

 private:
  std::mutex mu_;
  std::vector<Rational> values_;
};

}  // namespace

Rational area_coeff(int nu) {
  if (nu < 0) throw DomainError("area_coeff: nu < 0");
  static CoefficientTable table;
  return table.get(nu, [](int n) {
    Rational s(0);
    for (int l = 0; l <= n; ++l)
      s += Rational(binomial(n, l)) * Rational(-4).pow(l) * bernoulli_at_half(2 * l);
    return s / (Rational(factorial(n)) * Rational(4).pow(n));
  });
}

Rational boundary_coeff(int nu) {
  if (nu < 0) throw DomainError("boundary_coeff: nu < 0");
  static CoefficientTable table;
  return table.get(nu, [](int n) {
    return Rational(-1) / (Rational(4).pow(n) * Rational(factorial(n)));
  });
}

Scalar hyper_vertex_coeff(int ell, const Angle& gamma) {
  if (ell < 0) throw DomainError("hyper_vertex_coeff: ell < 0");
  std::vector<Rational> weights;
  for (int j = 1; j <= ell + 1; ++j) weights.push_back(hyper_vertex_weight(ell, j));
  return weighted_w_sum(weights, gamma);
}

Scalar vertex_coeff(int nu, const Angle& gamma) {
  if (nu < 0) throw DomainError("vertex_coeff: nu < 0");
  // e_nu = sum_{l=0}^{nu} (-4)^l / (4^nu (nu-l)!) c_l^H; collect per-w_j
  // weights first so float angles get a single high-precision pass.
  std::vector<Rational> weights(nu + 1, Rational(0));
  for (int l = 0; l <= nu; ++l) {
    Rational outer = Rational(-4).pow(l) / (Rational(4).pow(nu) * Rational(factorial(nu - l)));
    for (int j = 1; j <= l + 1; ++j)
      weights[j - 1] += outer * hyper_vertex_weight(l, j);
  }
  return weighted_w_sum(weights, gamma);
}

Rational sphere_small_coeff(int l) {
  if (l < -1) throw DomainError("sphere_small_coeff: l < -1");
  return Rational((l + 1) % 2 == 0 ? 1 : -1) * bernoulli_at_half(2 * l + 2) /
         Rational(factorial(l + 1));
}

Rational sphere_interior_coeff(int nu) {
  if (nu < -1) throw DomainError("sphere_interior_coeff: nu < -1");
  static CoefficientTable table;  // shifted by one: index 0 holds nu = -1
  return table.get(nu + 1, [](int idx) {
    int n = idx - 1;
    Rational s(0);
    for (int l = 0; l <= n + 1; ++l)
      s += sphere_small_coeff(n - l) / (Rational(4).pow(l) * Rational(factorial(l)));
    return s;
  });
}

Rational lune_coeff_cS(int ell, int k) {
  if (ell < 0 || k < 1) throw DomainError("lune_coeff_cS: ell >= 0, k >= 1 required");
  Rational s(0);
  for (int j = 0; j <= ell + 1; ++j)
    s += Rational(binomial(2 * ell + 2, 2 * j)) * (Rational(k).pow(2 * j) - Rational(1)) *
         bernoulli_number(2 * j) * bernoulli_at_half(2 * ell + 2 - 2 * j);
  return Rational(ell % 2 == 0 ? 1 : -1) * s /
         (Rational(4 * k) * Rational(factorial(ell + 1)) * Rational(2 * ell + 1));
}

AsymptoticSeries polygon_series(const PolygonSpec& spec, int order) {
  if (order < -2) throw DomainError("polygon_series: order < -2");
  require_valid(validate(spec));
  bool exact = spec.exact();

  AsymptoticSeries s;
  s.kappa = spec.kappa;
  s.min_n = -2;
  s.max_n = 2 * order;

  Scalar inv4pi = exact ? Scalar(PiPoly::monomial(Rational(1, 4), -2))
                        : Scalar(1.0 / (4 * 3.14159265358979323846));
  Scalar area_over_4pi = spec.area * inv4pi;
  s.set(-2, area_over_4pi);

  // Half powers: coefficient of t^{nu - 1/2} is (perimeter/(8 sqrt(pi))) r_nu kappa^nu.
  Scalar perim_over = spec.perimeter *
                      (exact ? Scalar(PiPoly::monomial(Rational(1, 8), -1))
                             : Scalar(1.0 / (8 * std::sqrt(3.14159265358979323846))));
  for (int nu = 0; 2 * nu - 1 <= 2 * order; ++nu) {
    Scalar c = perim_over * Scalar(boundary_coeff(nu)) * spec.kappa.pow(nu);
    s.set(2 * nu - 1, c);
  }

  // Integer powers: (area/4pi) f_{nu+1} kappa^{nu+1} + sum_i e_nu(gamma_i) kappa^nu.
  for (int nu = 0; nu <= order; ++nu) {
    Scalar c = area_over_4pi * Scalar(area_coeff(nu + 1)) * spec.kappa.pow(nu + 1);
    Scalar vertex = exact ? Scalar(Rational(0)) : Scalar(0.0);
    for (const auto& a : spec.angles) vertex = vertex + vertex_coeff(nu, a);
    c = c + vertex * spec.kappa.pow(nu);
    s.set(2 * nu, c);
  }
  float_normalize(&s, exact);
  return s;
}

AsymptoticSeries hyper_series_legacy(const PolygonSpec& spec, int order) {
  if (!(spec.kappa.exact() && spec.kappa.poly() == PiPoly(Rational(-1))) &&
      !(!spec.kappa.exact() && spec.kappa.to_double() == -1.0))
    throw WrongCurvature("hyper_series_legacy requires kappa = -1");
  require_valid(validate(spec));
  bool exact = spec.exact();

  AsymptoticSeries s;
  s.kappa = spec.kappa;
  s.min_n = -2;
  s.max_n = 2 * order;

  Scalar inv4pi = exact ? Scalar(PiPoly::monomial(Rational(1, 4), -2))
                        : Scalar(1.0 / (4 * 3.14159265358979323846));
  Scalar area_over_4pi = spec.area * inv4pi;
  s.set(-2, area_over_4pi);

  // b_k^H = |dOmega| (-1)^k / (4^{k+2} sqrt(pi) 2 (k+1)!), plus the leading
  // -|dOmega|/(8 sqrt(pi t)).
  Scalar inv_sqrt_pi = exact ? Scalar(PiPoly::monomial(Rational(1), -1))
                             : Scalar(1.0 / std::sqrt(3.14159265358979323846));
  s.set(-1, spec.perimeter * Scalar(Rational(-1, 8)) * inv_sqrt_pi);
  for (int k = 0; 2 * k + 1 <= 2 * order; ++k) {
    Rational bk = Rational(k % 2 == 0 ? 1 : -1) /
                  (Rational(4).pow(k + 2) * Rational(2) * Rational(factorial(k + 1)));
    s.set(2 * k + 1, spec.perimeter * Scalar(bk) * inv_sqrt_pi);
  }

  // c_l^H summed over angles, then nu_k^H and i_k^H.
  std::vector<Scalar> cH;
  for (int l = 0; l <= order; ++l) {
    Scalar c = exact ? Scalar(Rational(0)) : Scalar(0.0);
    for (const auto& a : spec.angles) c = c + hyper_vertex_coeff(l, a);
    cH.push_back(c);
  }
  for (int k = 0; k <= order; ++k) {
    Rational ik_factor(0);
    for (int l = 0; l <= k + 1; ++l)
      ik_factor += Rational(binomial(k + 1, l)) * Rational(-1, 4).pow(k + 1 - l) *
                   bernoulli_at_half(2 * l);
    Scalar ik = area_over_4pi * Scalar(ik_factor / Rational(factorial(k + 1)));
    Scalar nuk = exact ? Scalar(Rational(0)) : Scalar(0.0);
    for (int l = 0; l <= k; ++l)
      nuk = nuk + Scalar(Rational(-1, 4).pow(k - l) / Rational(factorial(k - l))) * cH[l];
    s.set(2 * k, ik + nuk);
  }
  float_normalize(&s, exact);
  return s;
}

AsymptoticSeries cone_contribution(long n, const Scalar& kappa, int order) {
  if (n < 1) throw DomainError("cone_contribution: order must be >= 1");
  bool exact = kappa.exact();
  AsymptoticSeries s;
  s.kappa = kappa;
  s.min_n = 0;
  s.max_n = 2 * order;
  for (int nu = 0; nu <= order; ++nu) {
    Rational sum(0);
    for (int l = 0; l <= nu; ++l)
      sum += Rational(2) / (Rational(4).pow(l) * Rational(factorial(l))) *
             lune_coeff_cS(nu - l, static_cast<int>(n));
    Scalar c = Scalar(sum) * kappa.pow(nu);
    s.set(2 * nu, exact ? c : Scalar(c.to_double()));
  }
  return s;
}

AsymptoticSeries dihedral_contribution(long m, const Scalar& kappa, int order) {
  AsymptoticSeries s = cone_contribution(m, kappa, order);
  for (auto& [n, c] : s.coefficients) c = c * Scalar(Rational(1, 2));
  return s;
}

AsymptoticSeries mirror_contribution(const Scalar& length, const Scalar& kappa,
                                     int order) {
  if (length.to_double() < 0.0) throw DomainError("mirror_contribution: length < 0");
  bool exact = length.exact() && kappa.exact();
  AsymptoticSeries s;
  s.kappa = kappa;
  s.min_n = -1;
  s.max_n = 2 * order;
  Scalar inv_sqrt_4pi = exact ? Scalar(PiPoly::monomial(Rational(1, 2), -1))
                              : Scalar(0.5 / std::sqrt(3.14159265358979323846));
  for (int nu = 0; 2 * nu - 1 <= 2 * order; ++nu) {
    Scalar c = length * inv_sqrt_4pi *
               Scalar(Rational(1) / (Rational(4).pow(nu + 1) * Rational(factorial(nu)))) *
               kappa.pow(nu);
    s.set(2 * nu - 1, exact ? c : Scalar(c.to_double()));
  }
  return s;
}

AsymptoticSeries orbifold_series(const OrbisurfaceSpec& spec, int order) {
  require_valid(validate(spec));
  bool exact = spec.exact();

  AsymptoticSeries s;
  s.kappa = spec.kappa;
  s.min_n = -2;
  s.max_n = 2 * order;

  Scalar inv4pi = exact ? Scalar(PiPoly::monomial(Rational(1, 4), -2))
                        : Scalar(1.0 / (4 * 3.14159265358979323846));
  Scalar area_over_4pi = spec.area * inv4pi;
  // Interior: (1/4pi t) sum a_nu t^nu with a_nu = area f_nu kappa^nu.
  for (int nu = 0; 2 * (nu - 1) <= 2 * order; ++nu)
    s.set(2 * (nu - 1), area_over_4pi * Scalar(area_coeff(nu)) * spec.kappa.pow(nu));

  AsymptoticSeries mirror = mirror_contribution(spec.mirror_length, spec.kappa, order);
  for (const auto& [n, c] : mirror.coefficients) s.set(n, s.at(n) + c);
  for (long nj : spec.cone_orders) {
    AsymptoticSeries cone = cone_contribution(nj, spec.kappa, order);
    for (const auto& [n, c] : cone.coefficients) s.set(n, s.at(n) + c);
  }
  for (long mi : spec.dihedral_half_orders) {
    AsymptoticSeries dih = dihedral_contribution(mi, spec.kappa, order);
    for (const auto& [n, c] : dih.coefficients) s.set(n, s.at(n) + c);
  }
  float_normalize(&s, exact);
  return s;
}

AsymptoticSeries lune_series(int k, const Scalar& kappa, int order) {
  if (k < 1) throw DomainError("lune_series: k >= 1 required");
  if (!(kappa.to_double() > 0.0)) throw DomainError("lune_series: kappa > 0 required");
  Scalar sqrt_kappa = kappa.sqrt();
  bool exact = kappa.exact() && sqrt_kappa.exact();

  AsymptoticSeries s;
  s.kappa = kappa;
  s.min_n = -2;
  s.max_n = 2 * order;

  Scalar inv_kappa = kappa.inverse();
  s.set(-2, Scalar(Rational(1, 2 * k)) * (exact ? inv_kappa : Scalar(inv_kappa.to_double())));

  Scalar sqrt_pi = exact ? Scalar(PiPoly::monomial(Rational(1), 1))
                         : Scalar(std::sqrt(3.14159265358979323846));
  s.set(-1, Scalar(Rational(-1, 4)) * sqrt_pi * sqrt_kappa.inverse());

  for (int nu = 0; nu <= order; ++nu) {
    Rational bracket = Rational(1, 2 * k) * sphere_interior_coeff(nu);
    for (int l = 0; l <= nu; ++l)
      bracket += Rational(2) / (Rational(4).pow(l) * Rational(factorial(l))) *
                 lune_coeff_cS(nu - l, k);
    s.set(2 * nu, Scalar(bracket) * kappa.pow(nu));
    // half-power: -(sqrt(pi)/4) kappa^{nu+1/2} / (4^{nu+1} (nu+1)!)
    if (2 * nu + 1 <= 2 * order) {
      Scalar c = Scalar(Rational(-1, 4)) * sqrt_pi * kappa.pow(nu) * sqrt_kappa *
                 Scalar(Rational(1) / (Rational(4).pow(nu + 1) * Rational(factorial(nu + 1))));
      s.set(2 * nu + 1, c);
    }
  }
  if (!exact)
    for (auto& [n, c] : s.coefficients) c = Scalar(c.to_double());
  return s;
}

}  // namespace specgeo
