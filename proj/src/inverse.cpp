#include "specgeo/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "specgeo/errors.hpp"
#include "specgeo/invariants.hpp"
#include "specgeo/numkit.hpp"

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Bernoulli-weight factor of w_j inside c_l^H (same shape as in invariants).
Rational vertex_weight(int ell, int j) {
  return Rational(binomial(2 * ell + 2, 2 * j)) * bernoulli_at_half(2 * ell - 2 * j + 2) *
         bernoulli_number(2 * j) /
         (Rational(4) * Rational(factorial(ell + 1)) * Rational(2 * ell + 1));
}

// T_{nu,j}: coefficient of W_{j-1} in V_nu = sum_j T_{nu,j} W_{j-1}.
Rational t_coeff(int nu, int j) {
  Rational total(0);
  for (int l = j - 1; l <= nu; ++l)
    total += Rational(-4).pow(l) / (Rational(4).pow(nu) * Rational(factorial(nu - l))) *
             vertex_weight(l, j);
  return total;
}

bool scalar_is_exact_zero(const Scalar& s) { return s.exact() && s.is_zero(); }

// Best rational approximation p/q of x with q <= qmax (continued fractions).
bool cf_approx(double x, long qmax, long* p_out, long* q_out) {
  if (!(x > 0.0) || !std::isfinite(x)) return false;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double xx = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(xx);
    if (fl > 1e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = xx - fl;
    if (frac < 1e-14) break;
    xx = 1.0 / frac;
  }
  if (q1 == 0 || p1 <= 0) return false;
  *p_out = p1;
  *q_out = q1;
  return true;
}

struct PeelState {
  // hat-W sequence: hatW_nu = W_{nu+1} - W_nu = sum_i u_i x_i^{2nu+1},
  // u_i = x_i^2 - 1, x_i = pi / gamma_i.
  bool exact;
  std::vector<Rational> exact_seq;
  std::vector<double> float_seq;
  std::vector<double> noise;  // accumulated float noise floor
  int top() const {
    return static_cast<int>((exact ? exact_seq.size() : float_seq.size())) - 1;
  }
  double value(int nu) const {
    return exact ? exact_seq[nu].to_double() : float_seq[nu];
  }
};

struct PeeledAngle {
  bool exact;
  long p, q;     // angle (p/q) pi when exact
  double theta;  // radians
  long multiplicity;
  double residual;  // multiplicity rounding residual
};

// One peeling stage; returns false when the sequence is exhausted (all zero /
// below tolerance).
bool peel_one(PeelState* st, double tol, PeeledAngle* out) {
  int n_top = st->top();
  if (st->exact) {
    bool all_zero = true;
    for (const auto& v : st->exact_seq)
      if (!v.is_zero()) { all_zero = false; break; }
    if (all_zero) return false;
  } else {
    bool quiet = true;
    for (int nu = 0; nu <= n_top; ++nu)
      if (std::abs(st->float_seq[nu]) > tol * (1.0 + st->noise[nu] / tol) &&
          std::abs(st->float_seq[nu]) > 1e4 * st->noise[nu]) {
        quiet = false;
        break;
      }
    if (quiet) return false;
  }

  // Deepest usable index pair for the dominant-angle ratio.
  int nu_hi = -1;
  if (st->exact) {
    for (int nu = n_top; nu >= 1; --nu)
      if (!st->exact_seq[nu].is_zero() && !st->exact_seq[nu - 1].is_zero()) {
        nu_hi = nu;
        break;
      }
  } else {
    for (int nu = n_top; nu >= 1; --nu)
      if (std::abs(st->float_seq[nu]) > 1e6 * st->noise[nu] &&
          std::abs(st->float_seq[nu - 1]) > 1e6 * st->noise[nu - 1]) {
        nu_hi = nu;
        break;
      }
  }
  if (nu_hi < 1) throw NonConvergent("recover_angles: no usable depth left");

  double a = st->value(nu_hi - 1), b = st->value(nu_hi);
  double ratio = b / a;
  if (!(ratio > 0.0))
    throw NegativeRatio("recover_angles: ratio of successive W values not positive");
  double x = std::sqrt(ratio);  // pi / gamma of the dominant angle
  long p = 0, q = 0;
  bool exactified =
      cf_approx(1.0 / x, 100, &p, &q) &&
      std::abs(static_cast<double>(p) / q - 1.0 / x) <= 5e-3 * std::max(1.0, 1.0 / x) &&
      2 * q >= p;
  double theta = exactified ? kPi * static_cast<double>(p) / q : kPi / x;

  // Multiplicity certificate: W_hi / (u x^{2 hi + 1}) must be a near-integer.
  double xe = exactified ? static_cast<double>(q) / p : x;
  double u = xe * xe - 1.0;
  if (u == 0.0) throw NonConvergent("recover_angles: dominant angle is pi");
  double mf = st->value(nu_hi) / (u * std::pow(xe, 2.0 * nu_hi + 1.0));
  long mult = std::lround(mf);
  if (mult < 1 || std::abs(mf - mult) > 0.1)
    throw NonConvergent("recover_angles: multiplicity certificate failed (" +
                        std::to_string(mf) + ")");

  if (st->exact && exactified) {
    Rational xr(q, p);
    Rational ur = xr * xr - Rational(1);
    for (int nu = 0; nu <= n_top; ++nu)
      st->exact_seq[nu] -= Rational(mult) * ur * xr.pow(2 * nu + 1);
  } else {
    if (st->exact) {
      // Irrational estimate: degrade this and later stages to float.
      st->float_seq.resize(st->exact_seq.size());
      st->noise.assign(st->exact_seq.size(), 0.0);
      for (size_t i = 0; i < st->exact_seq.size(); ++i) {
        st->float_seq[i] = st->exact_seq[i].to_double();
        st->noise[i] = std::abs(st->float_seq[i]) * 1e-15;
      }
      st->exact = false;
    }
    for (int nu = 0; nu <= n_top; ++nu) {
      double c = mult * u * std::pow(xe, 2.0 * nu + 1.0);
      st->float_seq[nu] -= c;
      st->noise[nu] += std::abs(c) * 5e-15;
    }
  }

  out->exact = exactified;
  out->p = p;
  out->q = q;
  out->theta = theta;
  out->multiplicity = mult;
  out->residual = std::abs(mf - mult);
  return true;
}

std::vector<PeeledAngle> peel_all(const WSequence& w, double tol, int max_angles) {
  if (static_cast<int>(w.values.size()) < 2)
    throw ValidationError("recover_angles: need at least W_0, W_1");
  PeelState st;
  st.exact = true;
  for (const auto& v : w.values)
    if (!v.exact()) st.exact = false;

  int n = static_cast<int>(w.values.size()) - 1;
  if (st.exact) {
    st.exact_seq.reserve(n);
    for (int nu = 0; nu < n; ++nu) {
      PiPoly diff = w.values[nu + 1].poly() - w.values[nu].poly();
      if (!diff.is_rational())
        throw ValidationError("recover_angles: exact W values must be rational");
      st.exact_seq.push_back(diff.rational_part());
    }
  } else {
    st.float_seq.reserve(n);
    for (int nu = 0; nu < n; ++nu)
      st.float_seq.push_back(w.values[nu + 1].to_double() - w.values[nu].to_double());
    st.noise.resize(n);
    for (int nu = 0; nu < n; ++nu)
      st.noise[nu] = std::abs(st.float_seq[nu]) * 1e-13 + 1e-300;
  }

  std::vector<PeeledAngle> found;
  for (int stage = 0; stage <= max_angles; ++stage) {
    PeeledAngle pa;
    if (!peel_one(&st, tol, &pa)) return found;
    found.push_back(pa);
  }
  throw NonConvergent("recover_angles: more angles than max_angles");
}

Scalar coefficient_or_throw(const AsymptoticSeries& s, int n, const char* what) {
  if (n < s.min_n || n > s.max_n)
    throw MissingCoefficient(std::string("series lacks the ") + what + " coefficient");
  return s.at(n);
}

}  // namespace

std::tuple<Scalar, Scalar, Scalar> recover_basic(const AsymptoticSeries& series) {
  bool exact = series.exact();
  Scalar four_pi = exact ? Scalar(PiPoly::monomial(Rational(4), 2)) : Scalar(4 * kPi);
  Scalar area = four_pi * coefficient_or_throw(series, -2, "t^-1");

  Scalar m8_sqrt_pi = exact ? Scalar(PiPoly::monomial(Rational(-8), 1))
                            : Scalar(-8 * std::sqrt(kPi));
  Scalar perimeter = m8_sqrt_pi * coefficient_or_throw(series, -1, "t^-1/2");

  Scalar kappa;
  if (!perimeter.is_zero()) {
    Scalar m32_sqrt_pi = exact ? Scalar(PiPoly::monomial(Rational(-32), 1))
                               : Scalar(-32 * std::sqrt(kPi));
    kappa = coefficient_or_throw(series, 1, "t^1/2") * m32_sqrt_pi / perimeter;
  } else {
    if (series.min_n > 0 || series.max_n < 0)
      throw ZeroPerimeterAmbiguous(
          "perimeter vanishes and the t^0 coefficient is absent");
    // closed surface: c(t^0) = (area/4pi) f_1 kappa, f_1 = 1/3.
    Scalar twelve_pi = exact ? Scalar(PiPoly::monomial(Rational(12), 2)) : Scalar(12 * kPi);
    kappa = twelve_pi * series.at(0) / area;
  }
  return {area, perimeter, kappa};
}

std::vector<Scalar> recover_vertex_sums(const AsymptoticSeries& series,
                                        const Scalar& area, const Scalar& kappa,
                                        int order) {
  if (kappa.is_zero() && order >= 1)
    throw ZeroCurvature("recover_vertex_sums: only V_0 is determined at kappa = 0");
  bool exact = series.exact() && area.exact() && kappa.exact();
  Scalar inv4pi = exact ? Scalar(PiPoly::monomial(Rational(1, 4), -2)) : Scalar(1.0 / (4 * kPi));
  std::vector<Scalar> sums;
  for (int nu = 0; nu <= order; ++nu) {
    Scalar c = coefficient_or_throw(series, 2 * nu, "t^nu");
    Scalar v = c - area * inv4pi * Scalar(area_coeff(nu + 1)) * kappa.pow(nu + 1);
    sums.push_back(v / kappa.pow(nu));
  }
  return sums;
}

WSequence recover_W(const std::vector<Scalar>& vertex_sums) {
  if (vertex_sums.empty()) throw ValidationError("recover_W: empty input");
  int n = static_cast<int>(vertex_sums.size()) - 1;
  WSequence w;
  w.order = n;
  for (int nu = 0; nu <= n; ++nu) {
    Rational lead = t_coeff(nu, nu + 1);
    // (-1)^nu B_{2nu+2} / (4 (nu+1)! (2nu+1)) never vanishes.
    if (lead.is_zero())
      throw NumericalError("recover_W: singular leading coefficient");
    Scalar acc = vertex_sums[nu];
    for (int j = 1; j <= nu; ++j)
      acc = acc - Scalar(t_coeff(nu, j)) * w.values[j - 1];
    w.values.push_back(acc / Scalar(lead));
  }
  return w;
}

std::vector<RecoveredAngle> recover_angles(const WSequence& w, double tol,
                                           int max_angles) {
  std::vector<PeeledAngle> peeled = peel_all(w, tol, max_angles);
  std::vector<RecoveredAngle> out;
  for (const auto& pa : peeled) {
    Angle angle = pa.exact ? Angle::exact(pa.p, pa.q) : Angle::radians(pa.theta);
    out.push_back({angle, pa.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const RecoveredAngle& a, const RecoveredAngle& b) {
    return a.angle.value() < b.angle.value();
  });
  return out;
}

long recover_euler(const std::vector<RecoveredAngle>& angles, const Scalar& area,
                   const Scalar& kappa, long m) {
  bool exact = area.exact() && kappa.exact();
  for (const auto& ra : angles)
    if (!ra.angle.is_exact()) exact = false;
  if (exact) {
    PiPoly sum_gamma;
    for (const auto& ra : angles)
      sum_gamma += PiPoly::monomial(ra.angle.pi_fraction() * Rational(ra.multiplicity), 2);
    PiPoly numer = PiPoly::monomial(Rational(m), 2) + area.poly() * kappa.poly() - sum_gamma;
    PiPoly chi = numer / PiPoly::monomial(Rational(2), 2);
    if (chi.is_zero()) return 0;
    if (!chi.is_rational() || !chi.rational_part().is_integer())
      throw NonIntegerEuler("recover_euler: " + chi.to_string());
    return static_cast<long>(chi.rational_part().to_double());
  }
  double sum_gamma = 0.0;
  for (const auto& ra : angles) sum_gamma += ra.multiplicity * ra.angle.value();
  double chi = (m * kPi + area.to_double() * kappa.to_double() - sum_gamma) / (2 * kPi);
  double rounded = std::round(chi);
  if (std::abs(chi - rounded) > 1e-6)
    throw NonIntegerEuler("recover_euler: residual " + std::to_string(chi - rounded));
  return static_cast<long>(rounded);
}

double sum_reciprocal_angles(double c0, long m, long chi) {
  return 24.0 * c0 / kPi + static_cast<double>(m - 2 * chi) / kPi;
}

RecoveredPolygon recover_polygon(const AsymptoticSeries& series, double tol,
                                 int max_angles) {
  RecoveredPolygon rec;
  auto [area, perimeter, kappa] = recover_basic(series);
  rec.area = area;
  rec.perimeter = perimeter;
  rec.curvature = kappa;

  if (kappa.is_zero()) {
    rec.diagnostics.push_back(
        "flat polygon: only V_0 is spectrally determined; angle multiset not recovered");
    return rec;
  }

  int order = series.max_n / 2;
  std::vector<Scalar> sums = recover_vertex_sums(series, area, kappa, order);
  WSequence w = recover_W(sums);
  rec.angles = recover_angles(w, tol, max_angles);

  long m = 0;
  for (const auto& ra : rec.angles) m += ra.multiplicity;
  rec.euler_char = recover_euler(rec.angles, area, kappa, m);

  for (size_t i = 1; i < rec.angles.size(); ++i) {
    double lo = rec.angles[i - 1].angle.value(), hi = rec.angles[i].angle.value();
    if (hi / lo < 1.02)
      rec.diagnostics.push_back("angles " + rec.angles[i - 1].angle.to_string() + " and " +
                                rec.angles[i].angle.to_string() +
                                " are close (ratio < 1.02); peeling may merge them");
  }
  return rec;
}

RecoveredOrbifold recover_orbifold(const AsymptoticSeries& series,
                                   std::optional<Scalar> kappa_hint) {
  RecoveredOrbifold rec;
  bool exact = series.exact();
  Scalar four_pi = exact ? Scalar(PiPoly::monomial(Rational(4), 2)) : Scalar(4 * kPi);
  rec.area = four_pi * coefficient_or_throw(series, -2, "t^-1");

  Scalar sqrt_pi8 = exact ? Scalar(PiPoly::monomial(Rational(8), 1))
                          : Scalar(8 * std::sqrt(kPi));
  rec.mirror_length = sqrt_pi8 * coefficient_or_throw(series, -1, "t^-1/2");
  if (rec.mirror_length.to_double() < -1e-12)
    throw ValidationError(
        "recover_orbifold: negative mirror length (polygon-type boundary sign?)");

  if (rec.mirror_length.to_double() > 1e-12) {
    Scalar sqrt_pi32 = exact ? Scalar(PiPoly::monomial(Rational(32), 1))
                             : Scalar(32 * std::sqrt(kPi));
    rec.curvature = sqrt_pi32 * coefficient_or_throw(series, 1, "t^1/2") / rec.mirror_length;
  } else if (kappa_hint) {
    rec.curvature = *kappa_hint;
  } else {
    throw DomainError(
        "recover_orbifold: trivial mirror locus; curvature must be supplied");
  }
  if (rec.curvature.is_zero())
    throw ZeroCurvature("recover_orbifold: flat orbifolds expose only the nu = 0 sum");

  int order = series.max_n / 2;
  std::vector<Scalar> sums = recover_vertex_sums(series, rec.area, rec.curvature, order);
  WSequence w = recover_W(sums);
  std::vector<RecoveredAngle> angles = recover_angles(w, 1e-9, 24);

  for (const auto& ra : angles) {
    long q;
    if (ra.angle.is_exact()) {
      if (ra.angle.p() != 1)
        throw NonReciprocalAngle("recover_orbifold: peeled angle " +
                                 ra.angle.to_string() + " is not pi/q");
      q = ra.angle.q();
    } else {
      double ratio = kPi / ra.angle.value();
      q = std::lround(ratio);
      if (q < 2 || q > 64 || std::abs(ratio - q) > 1e-6)
        throw NonReciprocalAngle("recover_orbifold: peeled angle " +
                                 ra.angle.to_string() + " is not pi/q");
    }
    for (long i = 0; i < ra.multiplicity; ++i) rec.orders.push_back(q);
  }
  std::sort(rec.orders.begin(), rec.orders.end());

  // Parity gives the only general cone/dihedral separation.
  for (size_t i = 0; i < rec.orders.size();) {
    size_t j = i;
    while (j < rec.orders.size() && rec.orders[j] == rec.orders[i]) ++j;
    if ((j - i) % 2 == 1)
      rec.diagnostics.push_back("order " + std::to_string(rec.orders[i]) +
                                " appears an odd number of times: at least one "
                                "dihedral point of order " +
                                std::to_string(2 * rec.orders[i]));
    i = j;
  }
  rec.diagnostics.push_back(
      "cone points contribute their order twice, dihedral points once; the "
      "spectrum does not separate them in general");
  return rec;
}

}  // namespace specgeo
