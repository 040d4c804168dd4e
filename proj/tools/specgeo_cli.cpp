#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <atomic>
#include <thread>
#include <vector>

#include "specgeo/errors.hpp"
#include "specgeo/fitting.hpp"
#include "specgeo/invariants.hpp"
#include "specgeo/inverse.hpp"
#include "specgeo/serialization.hpp"
#include "specgeo/spectra.hpp"
#include "specgeo/trigsums.hpp"
#include "specgeo/wedgekernel.hpp"

namespace {

using namespace specgeo;

constexpr double kPi = 3.14159265358979323846264338327950288;

// Scalar grammar: "p/qpi" or "Npi" exact multiples of pi, "p/q" or "N" exact
// rationals, anything else a decimal double.
Scalar parse_scalar(const std::string& text) {
  std::string s = text;
  int pi_half_exp = 0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    pi_half_exp = 2;
    s = s.substr(0, s.size() - 2);
    if (s.empty() || s == "-") s += "1";
  }
  auto is_int = [](const std::string& v) {
    if (v.empty()) return false;
    size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (is_int(num) && is_int(den))
      return Scalar(PiPoly::monomial(Rational::from_decimal_string(num, den), pi_half_exp));
  } else if (is_int(s)) {
    return Scalar(PiPoly::monomial(Rational::from_decimal_string(s, "1"), pi_half_exp));
  }
  if (pi_half_exp != 0)
    throw ValidationError("cannot parse exact pi-multiple: " + text);
  return Scalar(std::strtod(text.c_str(), nullptr));
}

Angle parse_angle(const std::string& text) {
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    std::string s = text.substr(0, text.size() - 2);
    if (s.empty()) s = "1";
    long p = 1, q = 1;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      p = std::strtol(s.substr(0, slash).c_str(), nullptr, 10);
      q = std::strtol(s.substr(slash + 1).c_str(), nullptr, 10);
    } else {
      p = std::strtol(s.c_str(), nullptr, 10);
    }
    return Angle::exact(p, q);
  }
  return Angle::radians(std::strtod(text.c_str(), nullptr));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(std::strtod(p.c_str(), nullptr));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) out.push_back(static_cast<int>(std::strtol(p.c_str(), nullptr, 10)));
  return out;
}

// "a..b" inclusive range
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = static_cast<int>(std::strtol(text.c_str(), nullptr, 10));
    return {v, v};
  }
  return {static_cast<int>(std::strtol(text.substr(0, dots).c_str(), nullptr, 10)),
          static_cast<int>(std::strtol(text.substr(dots + 2).c_str(), nullptr, 10))};
}

void emit_series(const AsymptoticSeries& s, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(s).dump(2) << "\n";
    return;
  }
  std::cout << "n,t_power,coefficient\n";
  for (const auto& [n, c] : s.coefficients)
    std::cout << n << "," << (n % 2 == 0 ? std::to_string(n / 2) : std::to_string(n) + "/2")
              << "," << format_double(c.to_double()) << "\n";
}

Spectrum make_spectrum(const std::string& kind, int k, double r) {
  if (kind == "sphere") return sphere_spectrum(r);
  if (kind == "lune") return lune_spectrum(k, r);
  if (kind == "zk") return quotient_spectrum(QuotientGroup::Zk, k, r);
  if (kind == "dk") return quotient_spectrum(QuotientGroup::Dk, k, r);
  throw ValidationError("unknown spectrum kind: " + kind);
}

// SPECGEO_THREADS caps the worker count for grid evaluations.
unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPECGEO_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

int run(int argc, char** argv) {
  CLI::App app{"heat-trace invariants of constant-curvature polygons and orbisurfaces"};
  app.require_subcommand(1);

  // ---- coeffs ----------------------------------------------------------
  auto* coeffs = app.add_subcommand("coeffs", "closed-form series tables");
  coeffs->require_subcommand(1);
  std::string kappa_s = "1", area_s, perim_s = "0", angles_s, format = "json";
  std::string mirror_s = "0", cones_s, dihedrals_s;
  int order = 10, lune_k = 2;

  auto* cpoly = coeffs->add_subcommand("polygon", "polygon series");
  cpoly->add_option("--kappa", kappa_s, "curvature");
  cpoly->add_option("--area", area_s, "area")->required();
  cpoly->add_option("--perimeter", perim_s, "generalized perimeter");
  cpoly->add_option("--angles", angles_s, "comma list, e.g. 1/2pi,1/3pi or radians");
  cpoly->add_option("--order", order, "max integer t power");
  cpoly->add_option("--format", format, "json|csv");
  cpoly->callback([&] {
    PolygonSpec spec;
    spec.kappa = parse_scalar(kappa_s);
    spec.area = parse_scalar(area_s);
    spec.perimeter = parse_scalar(perim_s);
    for (const auto& a : split(angles_s, ',')) spec.angles.push_back(parse_angle(a));
    emit_series(polygon_series(spec, order), format);
  });

  auto* corb = coeffs->add_subcommand("orbifold", "orbisurface series");
  corb->add_option("--kappa", kappa_s, "curvature");
  corb->add_option("--area", area_s, "area")->required();
  corb->add_option("--mirror", mirror_s, "mirror locus length");
  corb->add_option("--cones", cones_s, "cone orders, comma list");
  corb->add_option("--dihedrals", dihedrals_s, "dihedral half-orders, comma list");
  corb->add_option("--order", order, "max integer t power");
  corb->add_option("--format", format, "json|csv");
  corb->callback([&] {
    OrbisurfaceSpec spec;
    spec.kappa = parse_scalar(kappa_s);
    spec.area = parse_scalar(area_s);
    spec.mirror_length = parse_scalar(mirror_s);
    for (int n : parse_int_list(cones_s)) spec.cone_orders.push_back(n);
    for (int m : parse_int_list(dihedrals_s)) spec.dihedral_half_orders.push_back(m);
    emit_series(orbifold_series(spec, order), format);
  });

  auto* clune = coeffs->add_subcommand("lune", "spherical lune series");
  clune->add_option("--k", lune_k, "lune angle pi/k")->required();
  clune->add_option("--kappa", kappa_s, "curvature > 0");
  clune->add_option("--order", order, "max integer t power");
  clune->add_option("--format", format, "json|csv");
  clune->callback([&] { emit_series(lune_series(lune_k, parse_scalar(kappa_s), order), format); });

  auto* csphere = coeffs->add_subcommand("sphere", "round sphere series");
  csphere->add_option("--kappa", kappa_s, "curvature > 0");
  csphere->add_option("--order", order, "max integer t power");
  csphere->add_option("--format", format, "json|csv");
  csphere->callback([&] {
    OrbisurfaceSpec spec;
    spec.kappa = parse_scalar(kappa_s);
    spec.area = Scalar(PiPoly::monomial(Rational(4), 2)) / spec.kappa;
    spec.mirror_length = Scalar(Rational(0));
    emit_series(orbifold_series(spec, order), format);
  });

  // ---- trace -----------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "heat trace evaluation and fitting");
  trace->require_subcommand(1);
  std::string kind = "sphere", t_list_s, input_file, exps_s = "-2,0,2,4";
  double radius = 1.0, rel_tol = 1e-12, t_min = 0.02, t_max = 0.2;
  int t_count = 15, spec_k = 3;

  auto* teval = trace->add_subcommand("eval", "evaluate Z(t) on a grid");
  teval->add_option("--kind", kind, "sphere|lune|zk|dk");
  teval->add_option("--k", spec_k, "symmetry order");
  teval->add_option("--r", radius, "sphere radius");
  teval->add_option("--t", t_list_s, "explicit comma list of t values");
  teval->add_option("--t-min", t_min, "log grid start");
  teval->add_option("--t-max", t_max, "log grid end");
  teval->add_option("--t-count", t_count, "log grid size");
  teval->add_option("--rel-tol", rel_tol, "certified relative tail bound");
  teval->callback([&] {
    Spectrum sp = make_spectrum(kind, spec_k, radius);
    std::vector<double> ts = t_list_s.empty() ? std::vector<double>{} : parse_double_list(t_list_s);
    if (ts.empty())
      for (int i = 0; i < t_count; ++i)
        ts.push_back(t_min * std::pow(t_max / t_min, t_count == 1 ? 0.0 : static_cast<double>(i) / (t_count - 1)));
    // grid points are independent; evaluate in parallel, output in order
    std::vector<TraceValue> values(ts.size());
    unsigned workers = std::min<unsigned>(thread_cap(), ts.size() ? ts.size() : 1);
    std::vector<std::thread> pool;
    std::atomic<size_t> cursor{0};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = cursor.fetch_add(1); i < ts.size(); i = cursor.fetch_add(1))
          values[i] = heat_trace(sp, ts[i], rel_tol);
      });
    for (auto& th : pool) th.join();
    std::cout << "t,value,tail_bound,terms_used\n";
    for (const TraceValue& v : values)
      std::cout << format_double(v.t) << "," << format_double(v.value) << ","
                << format_double(v.tail_bound) << "," << v.terms_used << "\n";
  });

  auto* tfit = trace->add_subcommand("fit", "least-squares series fit of a trace CSV");
  tfit->add_option("--input", input_file, "CSV from trace eval")->required();
  tfit->add_option("--exponents", exps_s, "basis exponents n (t^(n/2))");
  tfit->add_option("--compare", kind, "sphere|lune closed-form column");
  tfit->add_option("--k", spec_k, "lune k for --compare lune");
  tfit->callback([&] {
    std::ifstream in(input_file);
    if (!in) throw ValidationError("cannot open " + input_file);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::pair<double, double>> samples;
    while (std::getline(in, line)) {
      auto parts = split(line, ',');
      if (parts.size() >= 2)
        samples.emplace_back(std::strtod(parts[0].c_str(), nullptr),
                             std::strtod(parts[1].c_str(), nullptr));
    }
    FitConfig config;
    config.exponents = parse_int_list(exps_s);
    FitResult fr = fit_series(samples, config);
    AsymptoticSeries expected;
    bool have_expected = false;
    if (kind == "sphere") {
      OrbisurfaceSpec s;
      s.kappa = Scalar(Rational(1));
      s.area = Scalar(PiPoly::monomial(Rational(4), 2));
      s.mirror_length = Scalar(Rational(0));
      expected = orbifold_series(s, 12);
      have_expected = true;
    } else if (kind == "lune") {
      expected = lune_series(spec_k, Scalar(Rational(1)), 12);
      have_expected = true;
    }
    std::cout << "n,fitted,expected\n";
    for (const auto& [n, c] : fr.coefficients) {
      std::cout << n << "," << format_double(c) << ",";
      if (have_expected && n >= expected.min_n && n <= expected.max_n)
        std::cout << format_double(expected.at(n).to_double());
      std::cout << "\n";
    }
    std::cerr << "residual_norm=" << format_double(fr.residual_norm)
              << " condition=" << format_double(fr.condition_estimate) << "\n";
  });

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "residual suites");
  verify->require_subcommand(1);
  std::string krange_s = "2..40", etarange_s = "0..8", klist_s = "2,3,4,6",
              tlist_s = "0.1,0.5,1.0";
  int roundtrip_count = 25;
  unsigned long seed = 20240817;

  auto* vtrig = verify->add_subcommand("trig", "finite trigonometric sum identity");
  vtrig->add_option("--k", krange_s, "k range a..b");
  vtrig->add_option("--eta", etarange_s, "eta range a..b");
  vtrig->callback([&] {
    auto [k0, k1] = parse_range(krange_s);
    auto [e0, e1] = parse_range(etarange_s);
    std::cout << "k,eta,residual\n";
    double worst = 0.0;
    for (int k = k0; k <= k1; ++k)
      for (int eta = e0; eta <= e1; ++eta) {
        double r = identity_residual(k, eta);
        worst = std::max(worst, r);
        std::cout << k << "," << eta << "," << format_double(r) << "\n";
      }
    if (worst > 1e-9)
      throw NonConvergent("trig identity residual " + format_double(worst));
  });

  auto* vrel = verify->add_subcommand("relation", "Z_{M/Zk} - Z_{M/Dk} = Z_lune");
  vrel->add_option("--k", klist_s, "comma list of k");
  vrel->add_option("--t", tlist_s, "comma list of t");
  vrel->callback([&] {
    std::cout << "k,t,z_zk,z_dk,z_lune,residual,tail_bounds\n";
    double worst = 0.0;
    for (int k : parse_int_list(klist_s))
      for (double t : parse_double_list(tlist_s)) {
        TraceValue zk = heat_trace(quotient_spectrum(QuotientGroup::Zk, k, 1.0), t, 1e-13);
        TraceValue dk = heat_trace(quotient_spectrum(QuotientGroup::Dk, k, 1.0), t, 1e-13);
        TraceValue lu = heat_trace(lune_spectrum(k, 1.0), t, 1e-13);
        double res = std::abs(zk.value - dk.value - lu.value);
        double bounds = zk.tail_bound + dk.tail_bound + lu.tail_bound;
        worst = std::max(worst, res);
        std::cout << k << "," << format_double(t) << "," << format_double(zk.value) << ","
                  << format_double(dk.value) << "," << format_double(lu.value) << ","
                  << format_double(res) << "," << format_double(bounds) << "\n";
        if (res > bounds + 1e-10)
          throw NonConvergent("trace relation residual " + format_double(res));
      }
    (void)worst;
  });

  auto* vmehler = verify->add_subcommand("mehler", "product-integral identity");
  vmehler->callback([&] {
    struct Sample { double nu, theta, a, b; };
    const Sample samples[10] = {
        {0.5, kPi / 2, 0.7, 1.2}, {0.5, kPi, 0.7, 1.2},   {0.5, kPi / 2, 0.9, 0.9},
        {0.0, kPi / 3, 0.5, 1.0}, {1.0, kPi / 2, 1.0, 1.5}, {1.5, 2.0, 0.6, 0.8},
        {0.25, 1.0, 1.2, 0.4},    {0.75, 4.0, 0.8, 1.1},  {2.0, kPi / 2, 0.5, 0.5},
        {0.5, 5.0, 1.0, 1.0}};
    std::cout << "nu,theta,a,b,residual,quadrature_error\n";
    double worst = 0.0;
    for (const auto& s : samples) {
      double qerr = 0.0;
      double r = mehler_identity_residual(s.nu, s.theta, s.a, s.b, &qerr);
      worst = std::max(worst, r);
      std::cout << format_double(s.nu) << "," << format_double(s.theta) << ","
                << format_double(s.a) << "," << format_double(s.b) << ","
                << format_double(r) << "," << format_double(qerr) << "\n";
    }
    if (worst > 1e-6) throw NonConvergent("mehler residual " + format_double(worst));
  });

  auto* vgreen = verify->add_subcommand("green", "resolvent of the shifted kernel");
  vgreen->callback([&] {
    struct Sample { double d, s; };
    const Sample samples[6] = {{1.0, 1.0}, {0.5, 0.5}, {2.0, 1.0},
                               {1.0, 2.5}, {0.3, 4.0}, {1.5, 0.3}};
    std::cout << "d,s,residual,quadrature_error\n";
    double worst = 0.0;
    for (const auto& s : samples) {
      double qerr = 0.0;
      double r = green_plane_residual(s.d, s.s, &qerr);
      worst = std::max(worst, r);
      std::cout << format_double(s.d) << "," << format_double(s.s) << ","
                << format_double(r) << "," << format_double(qerr) << "\n";
    }
    if (worst > 1e-6) throw NonConvergent("green residual " + format_double(worst));
  });

  auto* vwedge = verify->add_subcommand("wedge", "image method checks");
  vwedge->callback([&] {
    std::cout << "check,k_or_gamma,value,expected,error,quadrature_error\n";
    double worst_boundary = 0.0;
    unsigned long state = 12345;
    auto next_uniform = [&state] {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<double>((state >> 11) & ((1ULL << 52) - 1)) / (1ULL << 52);
    };
    for (int k : {2, 3, 4, 6}) {
      double gamma = kPi / k;
      for (int i = 0; i < 50; ++i) {
        HPoint x{0.3 + next_uniform(), gamma * (0.05 + 0.9 * next_uniform())};
        HPoint y{0.3 + next_uniform(), (next_uniform() < 0.5) ? 0.0 : gamma};
        double v = std::abs(wedge_kernel_images(k, x, y, 0.5));
        worst_boundary = std::max(worst_boundary, v);
      }
      std::cout << "boundary_vanishing," << k << "," << format_double(worst_boundary)
                << ",0," << format_double(worst_boundary) << ",1e-10\n";
    }
    for (double gamma : {kPi / 2, kPi / 3, 2 * kPi / 3, 1.0}) {
      std::vector<std::pair<double, double>> samples;
      for (int i = 0; i < 9; ++i) {
        double t = 0.005 * std::pow(10.0, i / 8.0);
        samples.emplace_back(t, vertex_term_integral(gamma, t));
      }
      FitConfig config;
      config.exponents = {0, 2, 4, 6};
      FitResult fr = fit_series(samples, config);
      double expected = hyper_vertex_coeff(0, Angle::radians(gamma)).to_double();
      double err = std::abs(fr.coefficients[0] - expected) / std::abs(expected);
      std::cout << "vertex_term_c0," << format_double(gamma) << ","
                << format_double(fr.coefficients[0]) << "," << format_double(expected)
                << "," << format_double(err) << ","
                << format_double(fr.residual_norm) << "\n";
      if (err > 1e-4) throw NonConvergent("vertex term fit error " + format_double(err));
    }
    if (worst_boundary > 1e-12)
      throw NonConvergent("boundary vanishing " + format_double(worst_boundary));
  });

  auto* vround = verify->add_subcommand("roundtrip", "inverse spectral round trips");
  vround->add_option("--count", roundtrip_count, "number of random specs");
  vround->add_option("--seed", seed, "PRNG seed");
  vround->callback([&] {
    unsigned long state = seed;
    auto next = [&state](long n) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<long>((state >> 33) % n);
    };
    const std::pair<long, long> pool[5] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {1, 7}};
    const Rational kappas[4] = {Rational(-1), Rational(1), Rational(1, 4), Rational(-1, 4)};
    std::cout << "trial,kappa,n_angles,recovered,exact_match\n";
    int failures = 0;
    for (int trial = 0; trial < roundtrip_count; ++trial) {
      Rational kap = kappas[next(4)];
      int n_angles = 1 + static_cast<int>(next(5));
      PolygonSpec spec;
      spec.kappa = Scalar(kap);
      spec.perimeter = Scalar(Rational(1 + next(20)));
      Rational sum_pq(0);
      for (int i = 0; i < n_angles; ++i) {
        auto [p, q] = pool[next(5)];
        spec.angles.push_back(Angle::exact(p, q));
        sum_pq += Rational(p, q);
      }
      // Gauss-Bonnet: area = (sum gamma - M pi + 2 pi chi)/kappa with chi
      // chosen so the area is positive.
      bool placed = false;
      for (long chi = -3; chi <= 3 && !placed; ++chi) {
        Rational coeff = sum_pq - Rational(n_angles) + Rational(2 * chi);
        Rational area_over_pi = coeff / kap;
        if (area_over_pi > Rational(0)) {
          spec.area = Scalar(PiPoly::monomial(area_over_pi, 2));
          placed = true;
        }
      }
      if (!placed) { --trial; continue; }
      AsymptoticSeries series = polygon_series(spec, 2 * n_angles + 6);
      RecoveredPolygon rec = recover_polygon(series);
      std::vector<Angle> want = spec.angles, got;
      for (const auto& ra : rec.angles)
        for (long i = 0; i < ra.multiplicity; ++i) got.push_back(ra.angle);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      bool ok = want.size() == got.size() && rec.area.identical(spec.area) &&
                rec.perimeter.identical(spec.perimeter) &&
                rec.curvature.identical(spec.kappa);
      for (size_t i = 0; ok && i < want.size(); ++i)
        ok = std::abs(want[i].value() - got[i].value()) <= 1e-6;
      if (!ok) ++failures;
      std::cout << trial << "," << kap.to_string() << "," << n_angles << ","
                << got.size() << "," << (ok ? 1 : 0) << "\n";
    }
    if (failures > 0)
      throw NonConvergent(std::to_string(failures) + " round trips failed");
  });

  // ---- invert ----------------------------------------------------------
  auto* invert = app.add_subcommand("invert", "inverse spectral recovery");
  invert->require_subcommand(1);
  std::string series_file, kappa_hint_s;
  double peel_tol = 1e-9;

  auto* ipoly = invert->add_subcommand("polygon", "recover a polygon from a series");
  ipoly->add_option("--series", series_file, "series JSON file")->required();
  ipoly->add_option("--tol", peel_tol, "peeling tolerance");
  ipoly->callback([&] {
    std::ifstream in(series_file);
    if (!in) throw ValidationError("cannot open " + series_file);
    Json j = Json::parse(in);
    RecoveredPolygon rec = recover_polygon(series_from_json(j), peel_tol);
    std::cout << to_json(rec).dump(2) << "\n";
  });

  auto* iorb = invert->add_subcommand("orbifold", "recover an orbisurface from a series");
  iorb->add_option("--series", series_file, "series JSON file")->required();
  iorb->add_option("--kappa", kappa_hint_s, "curvature hint when the mirror locus is empty");
  iorb->callback([&] {
    std::ifstream in(series_file);
    if (!in) throw ValidationError("cannot open " + series_file);
    Json j = Json::parse(in);
    std::optional<Scalar> hint;
    if (!kappa_hint_s.empty()) hint = parse_scalar(kappa_hint_s);
    RecoveredOrbifold rec = recover_orbifold(series_from_json(j), hint);
    std::cout << to_json(rec).dump(2) << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const specgeo::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const specgeo::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
