#include <doctest.h>

#include <cmath>

#include "specgeo/errors.hpp"
#include "specgeo/spectra.hpp"

using namespace specgeo;

TEST_CASE("sphere spectrum entries") {
  Spectrum s = sphere_spectrum(1.0);
  CHECK(s.entry(0).eigenvalue == 0.0);
  CHECK(s.entry(0).multiplicity == 1);
  CHECK(s.entry(1).eigenvalue == 2.0);
  CHECK(s.entry(1).multiplicity == 3);
  CHECK(s.entry(2).eigenvalue == 6.0);
  CHECK(s.entry(2).multiplicity == 5);

  Spectrum half = sphere_spectrum(2.0);
  for (int i = 0; i < 10; ++i)
    CHECK(half.entry(i).eigenvalue == doctest::Approx(s.entry(i).eigenvalue / 4.0));
}

TEST_CASE("sphere Weyl count approaches area/(4 pi) = r^2") {
  double r = 1.0;
  double lambda_max = 40000.0;
  Spectrum s = sphere_spectrum(r);
  double count = 0.0;
  for (long i = 0;; ++i) {
    SpectrumEntry e = s.entry(i);
    if (e.eigenvalue > lambda_max) break;
    count += e.multiplicity;
  }
  CHECK(count / lambda_max == doctest::Approx(r * r).epsilon(2e-2));
}

TEST_CASE("lune spectrum entries") {
  Spectrum k1 = lune_spectrum(1, 1.0);
  CHECK(k1.entry(0).eigenvalue == 2.0);
  CHECK(k1.entry(0).multiplicity == 1);
  CHECK(k1.entry(1).eigenvalue == 6.0);
  CHECK(k1.entry(1).multiplicity == 2);
  CHECK(k1.entry(2).eigenvalue == 12.0);
  CHECK(k1.entry(2).multiplicity == 3);

  Spectrum k3 = lune_spectrum(3, 1.0);
  CHECK(k3.entry(0).eigenvalue == 12.0);  // N = 3
  CHECK(k3.entry(0).multiplicity == 1);
  CHECK(k3.entry(4).eigenvalue == 56.0);  // N = 7
  CHECK(k3.entry(4).multiplicity == 2);
  CHECK(k3.entry(0).eigenvalue > 0.0);
}

TEST_CASE("quotient spectrum entries") {
  for (int k = 2; k <= 8; ++k) {
    Spectrum zk = quotient_spectrum(QuotientGroup::Zk, k, 1.0);
    Spectrum dk = quotient_spectrum(QuotientGroup::Dk, k, 1.0);
    CHECK(zk.entry(0).multiplicity == 1);
    CHECK(dk.entry(0).multiplicity == 1);
    CHECK(zk.entry(k).multiplicity == 3);
    CHECK(dk.entry(k).multiplicity == 2);
  }
}

TEST_CASE("quotient multiplicities match the harmonic symmetrization oracle") {
  for (int k = 2; k <= 8; ++k)
    for (int l = 0; l <= 30; ++l) {
      CHECK(invariant_harmonics_dimension(QuotientGroup::Zk, k, l) == 2 * (l / k) + 1);
      CHECK(invariant_harmonics_dimension(QuotientGroup::Dk, k, l) == l / k + 1);
    }
}

TEST_CASE("multiplicity identity mult_Zk - mult_Dk = floor(l/k)") {
  for (int k : {2, 3, 5, 8, 13, 21, 40, 64}) {
    Spectrum zk = quotient_spectrum(QuotientGroup::Zk, k, 1.0);
    Spectrum dk = quotient_spectrum(QuotientGroup::Dk, k, 1.0);
    for (long l = 0; l <= 10000; ++l)
      CHECK(zk.entry(l).multiplicity - dk.entry(l).multiplicity == l / k);
  }
}

TEST_CASE("tail bound verified against brute-force tails on 20 pairs") {
  const std::pair<double, long> pairs[20] = {
      {0.01, 50}, {0.01, 100}, {0.05, 20}, {0.05, 40}, {0.1, 10},
      {0.1, 25},  {0.2, 8},    {0.3, 6},   {0.5, 4},   {0.5, 10},
      {1.0, 3},   {1.0, 6},    {0.02, 80}, {0.03, 60}, {0.07, 30},
      {0.15, 15}, {0.25, 12},  {0.4, 8},   {0.8, 5},   {2.0, 2}};
  for (const auto& [t, big_l] : pairs) {
    long double tail = 0.0L;
    for (long l = big_l + 1; l <= big_l + 4000; ++l)
      tail += (2.0L * l + 1) * expl(-static_cast<long double>(l) * (l + 1) * t);
    double bound = std::exp(-static_cast<double>(big_l) * (big_l + 1) * t) * (1.0 / t + 1.0);
    CHECK(static_cast<double>(tail) <= bound);
  }
}

TEST_CASE("heat trace: large t leaves only the zero mode") {
  TraceValue v = heat_trace(sphere_spectrum(1.0), 50.0, 1e-10);
  CHECK(v.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("heat trace: lune below the sphere (domain monotonicity)") {
  for (double t : {0.1, 0.5, 1.0}) {
    double sphere = heat_trace(sphere_spectrum(1.0), t, 1e-12).value;
    for (int k : {1, 2, 3})
      CHECK(heat_trace(lune_spectrum(k, 1.0), t, 1e-12).value < sphere);
  }
}

TEST_CASE("heat trace: strictly decreasing in t") {
  for (auto kind : {SpectrumKind::Sphere, SpectrumKind::Lune, SpectrumKind::QuotientZk}) {
    Spectrum s(kind, 3, 1.0);
    double prev = heat_trace(s, 0.05, 1e-12).value;
    for (double t : {0.1, 0.2, 0.4, 0.8, 1.6}) {
      double now = heat_trace(s, t, 1e-12).value;
      CHECK(now < prev);
      prev = now;
    }
  }
}

TEST_CASE("heat trace: scaling Z(r; t) = Z(1; t/r^2)") {
  for (double r : {0.5, 2.0, 3.0}) {
    for (double t : {0.1, 0.7}) {
      double a = heat_trace(sphere_spectrum(r), t, 1e-14).value;
      double b = heat_trace(sphere_spectrum(1.0), t / (r * r), 1e-14).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
  }
}

TEST_CASE("trace relation residual within combined tail bounds") {
  for (int k : {2, 3, 4, 6}) {
    for (double t : {0.1, 0.5, 1.0}) {
      TraceValue zk = heat_trace(quotient_spectrum(QuotientGroup::Zk, k, 1.0), t, 1e-13);
      TraceValue dk = heat_trace(quotient_spectrum(QuotientGroup::Dk, k, 1.0), t, 1e-13);
      TraceValue lune = heat_trace(lune_spectrum(k, 1.0), t, 1e-13);
      double residual = std::abs(zk.value - dk.value - lune.value);
      CHECK(residual <= zk.tail_bound + dk.tail_bound + lune.tail_bound + 1e-12);
    }
  }
}

TEST_CASE("heat trace input validation") {
  CHECK_THROWS_AS(heat_trace(sphere_spectrum(1.0), -1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(heat_trace(sphere_spectrum(1.0), 0.5, 2.0), DomainError);
  CHECK_THROWS_AS(heat_trace(sphere_spectrum(1.0), 1e-9, 1e-14, 100), NonConvergent);
}
