// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "specgeo/fitting.hpp"
#include "specgeo/invariants.hpp"
#include "specgeo/inverse.hpp"
#include "specgeo/spectra.hpp"
#include "specgeo/trigsums.hpp"
#include "specgeo/wedgekernel.hpp"

using namespace specgeo;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

void report(int criterion, bool pass, const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Rng {
  unsigned long state;
  explicit Rng(unsigned long seed) : state(seed) {}
  long next(long n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % n);
  }
};

// ---- criterion 1: exact coefficient reproduction --------------------------
void criterion1() {
  Timer timer;
  bool pass = true;
  std::string detail = "exact coefficient identities";

  pass &= area_coeff(1) == Rational(1, 3);
  pass &= bernoulli_at_half(2) == Rational(-1, 12);
  for (int nu = 0; nu <= 20 && pass; ++nu)
    pass &= boundary_coeff(nu) ==
            Rational(-1) / (Rational(4).pow(nu) * Rational(factorial(nu)));
  // e_0(gamma) = (pi^2 - gamma^2)/(24 pi gamma): exact at rational angles
  for (long p = 1; p <= 4 && pass; ++p)
    for (long q = p; q <= 9; ++q) {
      Rational pq(p, q);
      Rational expected = (Rational(1) - pq * pq) / (Rational(24) * pq);
      if (!(vertex_coeff(0, Angle::exact(p, q)).poly() == PiPoly(expected))) {
        pass = false;
        detail = "e_0 formula mismatch at " + std::to_string(p) + "/" + std::to_string(q);
        break;
      }
    }
  for (int nu = 0; nu <= 10 && pass; ++nu)
    pass &= vertex_coeff(nu, Angle::exact(1, 1)).poly().is_zero();
  for (int ell = 0; ell <= 20 && pass; ++ell)
    for (int k = 1; k <= 12; ++k) {
      Rational ch = hyper_vertex_coeff(ell, Angle::exact(1, k)).poly().rational_part();
      Rational cs = lune_coeff_cS(ell, k);
      if (ch != (ell % 2 == 0 ? cs : -cs)) {
        pass = false;
        detail = "c^H/c^S sign relation failed at ell=" + std::to_string(ell) +
                 " k=" + std::to_string(k);
        break;
      }
    }
  double sec = timer.seconds();
  pass &= sec < 5.0;
  report(1, pass, detail + ", runtime < 5 s", sec);
}

// ---- criterion 2: trace relation ------------------------------------------
void criterion2() {
  Timer timer;
  bool pass = true;
  double worst = 0.0;
  for (int k : {2, 3, 4, 6})
    for (double t : {0.1, 0.5, 1.0}) {
      TraceValue zk = heat_trace(quotient_spectrum(QuotientGroup::Zk, k, 1.0), t, 1e-13);
      TraceValue dk = heat_trace(quotient_spectrum(QuotientGroup::Dk, k, 1.0), t, 1e-13);
      TraceValue lune = heat_trace(lune_spectrum(k, 1.0), t, 1e-13);
      double residual = std::abs(zk.value - dk.value - lune.value);
      double bounds = zk.tail_bound + dk.tail_bound + lune.tail_bound;
      worst = std::max(worst, residual);
      pass &= residual <= bounds && residual <= 1e-10;
    }
  double sec = timer.seconds();
  pass &= sec < 30.0;
  report(2, pass,
         "Z_{M/Zk} - Z_{M/Dk} = Z_lune, worst residual " + sci(worst),
         sec);
}

// ---- criterion 3: coefficient recovery from real spectra ------------------
void criterion3() {
  Timer timer;
  bool pass = true;
  std::string detail;

  {
    FitConfig config;
    config.exponents = {-2, 0, 2, 4};
    std::vector<std::pair<double, double>> samples;
    Spectrum sphere = sphere_spectrum(1.0);
    for (int i = 0; i < 15; ++i) {
      double t = 0.02 * std::pow(10.0, static_cast<double>(i) / 14.0);
      samples.emplace_back(t, heat_trace(sphere, t, 1e-13).value);
    }
    FitResult fr = fit_series(samples, config);
    double e1 = std::abs(fr.coefficients[-2] - 1.0);
    double e2 = std::abs(fr.coefficients[0] - 1.0 / 3.0);
    pass &= e1 <= 1e-3 && e2 <= 1e-3;
    detail = "sphere errors " + sci(e1) + "/" + sci(e2);
  }
  {
    FitConfig config;
    config.exponents = {-2, -1, 0, 1, 2, 3, 4};
    std::vector<std::pair<double, double>> samples;
    Spectrum lune = lune_spectrum(3, 1.0);
    for (int i = 0; i < 18; ++i) {
      double t = 0.004 * std::pow(10.0, static_cast<double>(i) / 17.0);
      samples.emplace_back(t, heat_trace(lune, t, 1e-13).value);
    }
    FitResult fr = fit_series(samples, config);
    double want_half = -std::sqrt(kPi) / 4.0;
    AsymptoticSeries closed = lune_series(3, Scalar(Rational(1)), 4);
    double want_zero = closed.at(0).to_double();  // bracket at nu = 0
    double e1 = std::abs(fr.coefficients[-1] - want_half);
    double e2 = std::abs(fr.coefficients[0] - want_zero);
    pass &= e1 <= 1e-2 && e2 <= 1e-3;
    detail += ", lune errors " + sci(e1) + "/" + sci(e2);
  }
  double sec = timer.seconds();
  pass &= sec < 120.0;
  report(3, pass, "asymptotic coefficients from spectra: " + detail, sec);
}

// ---- criterion 4: trigonometric identity suite -----------------------------
void criterion4() {
  Timer timer;
  bool pass = true;
  double worst = 0.0;
  for (int k = 2; k <= 40; ++k)
    for (int eta = 0; eta <= 8; ++eta) worst = std::max(worst, identity_residual(k, eta));
  pass &= worst <= 1e-9;

  double worst_closed = 0.0;
  for (int k = 2; k <= 200; ++k)
    for (int n = 1; n <= 3; ++n) {
      double direct = trig_sum_direct(k, n);
      double closed = closed_sum(n, k).to_double();
      worst_closed =
          std::max(worst_closed, std::abs(direct - closed) / std::max(1.0, std::abs(closed)));
    }
  pass &= worst_closed <= 1e-10;
  double sec = timer.seconds();
  pass &= sec < 60.0;
  report(4, pass,
         "identity residual " + sci(worst) + ", closed sums " + sci(worst_closed),
         sec);
}

// ---- criterion 5: inverse round trips --------------------------------------
void criterion5() {
  Timer timer;
  bool pass = true;
  std::string detail;
  Rng rng(20240817);
  const std::pair<long, long> pool[5] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {1, 7}};
  const Rational kappas[4] = {Rational(-1), Rational(1), Rational(1, 4),
                              Rational(-1, 4)};
  int done = 0;
  while (done < 25 && pass) {
    Rational kappa = kappas[rng.next(4)];
    int n_angles = 1 + static_cast<int>(rng.next(5));
    PolygonSpec spec;
    spec.kappa = Scalar(kappa);
    spec.perimeter = Scalar(Rational(1 + rng.next(20)));
    Rational sum(0);
    for (int i = 0; i < n_angles; ++i) {
      auto [p, q] = pool[rng.next(5)];
      spec.angles.push_back(Angle::exact(p, q));
      sum += Rational(p, q);
    }
    bool placed = false;
    for (long chi = -3; chi <= 3 && !placed; ++chi) {
      Rational area_over_pi = (sum - Rational(n_angles) + Rational(2 * chi)) / kappa;
      if (area_over_pi > Rational(0)) {
        spec.area = Scalar(PiPoly::monomial(area_over_pi, 2));
        placed = true;
      }
    }
    if (!placed) continue;
    ++done;

    AsymptoticSeries series = polygon_series(spec, 2 * n_angles + 6);
    RecoveredPolygon rec = recover_polygon(series);
    bool ok = rec.area.identical(spec.area) && rec.perimeter.identical(spec.perimeter) &&
              rec.curvature.identical(spec.kappa);
    std::vector<double> want, got;
    for (const auto& a : spec.angles) want.push_back(a.value());
    for (const auto& ra : rec.angles)
      for (long i = 0; i < ra.multiplicity; ++i) got.push_back(ra.angle.value());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    ok &= want.size() == got.size();
    for (size_t i = 0; ok && i < want.size(); ++i)
      ok &= std::abs(want[i] - got[i]) <= 1e-6;
    if (!ok) {
      pass = false;
      detail = "polygon trial " + std::to_string(done) + " failed";
    }
  }
  if (pass) detail = "25 exact polygon round trips";

  int orb_done = 0;
  while (orb_done < 10 && pass) {
    Rational kappa = kappas[rng.next(4)];
    OrbisurfaceSpec spec;
    spec.kappa = Scalar(kappa);
    spec.area = Scalar(PiPoly::monomial(Rational(1 + rng.next(5)), 2));
    spec.mirror_length = Scalar(PiPoly::monomial(Rational(1 + rng.next(3)), 2));
    int n_cones = static_cast<int>(rng.next(3));
    int n_dihedral = 1 + static_cast<int>(rng.next(2));
    std::vector<long> expected;
    for (int i = 0; i < n_cones; ++i) {
      long n = 2 + rng.next(6);
      spec.cone_orders.push_back(n);
      expected.push_back(n);
      expected.push_back(n);
    }
    for (int i = 0; i < n_dihedral; ++i) {
      long m = 2 + rng.next(6);
      spec.dihedral_half_orders.push_back(m);
      expected.push_back(m);
    }
    ++orb_done;
    std::sort(expected.begin(), expected.end());
    AsymptoticSeries series = orbifold_series(spec, 16);
    RecoveredOrbifold rec = recover_orbifold(series);
    bool ok = rec.curvature.identical(spec.kappa) &&
              rec.mirror_length.identical(spec.mirror_length) && rec.orders == expected;
    if (!ok) {
      pass = false;
      detail = "orbifold trial " + std::to_string(orb_done) + " failed";
    }
  }
  if (pass) detail += " and 10 orbifold round trips recover the multiset exactly";
  double sec = timer.seconds();
  pass &= sec < 120.0;
  report(5, pass, detail, sec);
}

// ---- criterion 6: Mehler / Green quadrature identities ----------------------
void criterion6() {
  Timer timer;
  bool pass = true;
  double worst_mehler = 0.0;
  struct MSample { double nu, theta, a, b; };
  const MSample mehler[10] = {
      {0.5, kPi / 2, 0.7, 1.2}, {0.5, kPi, 0.7, 1.2},     {0.5, kPi / 2, 0.9, 0.9},
      {0.0, kPi / 3, 0.5, 1.0}, {1.0, kPi / 2, 1.0, 1.5}, {1.5, 2.0, 0.6, 0.8},
      {0.25, 1.0, 1.2, 0.4},    {0.75, 4.0, 0.8, 1.1},    {2.0, kPi / 2, 0.5, 0.5},
      {0.5, 5.0, 1.0, 1.0}};
  for (const auto& s : mehler)
    worst_mehler = std::max(worst_mehler, mehler_identity_residual(s.nu, s.theta, s.a, s.b));
  pass &= worst_mehler <= 1e-6;

  double worst_green = 0.0;
  struct GSample { double d, s; };
  const GSample green[6] = {{1.0, 1.0}, {0.5, 0.5}, {2.0, 1.0},
                            {1.0, 2.5}, {0.3, 4.0}, {1.5, 0.3}};
  for (const auto& s : green)
    worst_green = std::max(worst_green, green_plane_residual(s.d, s.s));
  pass &= worst_green <= 1e-6;

  double worst_dual = 0.0;
  for (double d : {0.5, 1.0, 2.0})
    for (double t : {0.1, 0.5, 1.0}) {
      double direct = heat_kernel_h2(d, t);
      double spectral = heat_kernel_h2_spectral(d, t);
      worst_dual = std::max(worst_dual, std::abs(direct - spectral) / direct);
    }
  pass &= worst_dual <= 1e-8;

  double sec = timer.seconds();
  pass &= sec < 300.0;
  report(6, pass,
         "mehler " + sci(worst_mehler) + ", green " + sci(worst_green) +
             ", dual kernels " + sci(worst_dual),
         sec);
}

// ---- criterion 7: image-method wedge ----------------------------------------
void criterion7() {
  Timer timer;
  bool pass = true;

  double worst_boundary = 0.0;
  Rng rng(5150);
  for (int k : {2, 3, 4, 6}) {
    double gamma = kPi / k;
    for (int i = 0; i < 50; ++i) {
      double ra = 0.3 + rng.next(1000) / 999.0;
      double rb = 0.3 + rng.next(1000) / 999.0;
      HPoint x{ra, gamma * (0.05 + 0.9 * rng.next(1000) / 999.0)};
      HPoint y{rb, rng.next(2) == 0 ? 0.0 : gamma};
      worst_boundary = std::max(worst_boundary, std::abs(wedge_kernel_images(k, x, y, 0.5)));
    }
  }
  pass &= worst_boundary <= 1e-12;

  double worst_vertex = 0.0;
  for (double gamma : {kPi / 2, kPi / 3, 2 * kPi / 3, 1.0}) {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 10; ++i) {
      double t = 0.004 * std::pow(12.0, i / 9.0);
      samples.emplace_back(t, vertex_term_integral(gamma, t));
    }
    FitConfig config;
    config.exponents = {0, 2, 4, 6};
    FitResult fr = fit_series(samples, config);
    double expected = hyper_vertex_coeff(0, Angle::radians(gamma)).to_double();
    worst_vertex =
        std::max(worst_vertex, std::abs(fr.coefficients[0] - expected) / std::abs(expected));
  }
  pass &= worst_vertex <= 1e-4;

  double worst_sector = 0.0;
  for (int k : {2, 3}) {
    double gamma = kPi / k;
    double r = 2.0;
    double area = gamma * (std::cosh(r) - 1.0);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 9; ++i) {
      double t = 0.005 * std::pow(8.0, i / 8.0);
      // The vertex piece of the shifted trace: subtract the interior part and
      // add back the boundary part -r/(4 sqrt(pi t)).
      double diff = wedge_sector_trace(k, r, t) - area * heat_kernel_h2_shifted(0.0, t) +
                    r / (4.0 * std::sqrt(kPi * t));
      samples.emplace_back(t, diff);
    }
    // The finite integration disc contributes a half-power correction of its
    // own (the arc is curved); include t^{1/2} and t^{3/2} as nuisance basis
    // functions and read the constant term.
    FitConfig config;
    config.exponents = {0, 1, 2, 3, 4};
    FitResult fr = fit_series(samples, config);
    double expected = hyper_vertex_coeff(0, Angle::exact(1, k)).to_double();
    worst_sector =
        std::max(worst_sector, std::abs(fr.coefficients[0] - expected) / std::abs(expected));
  }
  pass &= worst_sector <= 1e-3;

  double sec = timer.seconds();
  pass &= sec < 600.0;
  report(7, pass,
         "boundary " + sci(worst_boundary) + ", vertex fit " + sci(worst_vertex) +
             ", sector fit " + sci(worst_sector),
         sec);
}

// ---- criterion 8: hyperbolic theorem via exact series identity --------------
void criterion8() {
  Timer timer;
  bool pass = true;
  Rng rng(99);
  const std::pair<long, long> pool[6] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {1, 7}, {1, 4}};
  for (int trial = 0; trial < 20 && pass; ++trial) {
    PolygonSpec spec;
    spec.kappa = Scalar(Rational(-1));
    spec.perimeter = Scalar(Rational(1 + rng.next(12)));
    int n_angles = 3 + static_cast<int>(rng.next(4));
    Rational sum(0);
    for (int i = 0; i < n_angles; ++i) {
      auto [p, q] = pool[rng.next(6)];
      spec.angles.push_back(Angle::exact(p, q));
      sum += Rational(p, q);
    }
    bool placed = false;
    for (long chi = 1; chi >= -3 && !placed; --chi) {
      Rational area_over_pi = Rational(n_angles) - Rational(2 * chi) - sum;
      if (area_over_pi > Rational(0)) {
        spec.area = Scalar(PiPoly::monomial(area_over_pi, 2));
        placed = true;
      }
    }
    if (!placed) continue;
    AsymptoticSeries a = polygon_series(spec, 10);
    AsymptoticSeries b = hyper_series_legacy(spec, 10);
    pass &= series_residual(a, b) == 0.0;
  }
  double sec = timer.seconds();
  report(8, pass,
         "polygon_series == hyper_series_legacy exactly at kappa = -1 "
         "(closed hyperbolic-polygon spectra do not exist; analytic blocks "
         "validated by criteria 6-7)",
         sec);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
