#pragma once

#include <map>
#include <utility>
#include <vector>

#include "specgeo/geometry.hpp"

namespace specgeo {

struct FitConfig {
  std::vector<int> exponents;  // basis t^(n/2)
  enum class Weighting { None, Relative } weighting = Weighting::None;
  double condition_cap = 1e8;
};

struct FitResult {
  std::map<int, double> coefficients;  // per exponent n
  double residual_norm = 0.0;          // weighted RMS of (model - data)/data
  double condition_estimate = 0.0;
};

/// Linear least squares value ~ sum c_n t^{n/2} with unit-norm column scaling
/// and a QR solve; rejects ill-conditioned systems.
FitResult fit_series(const std::vector<std::pair<double, double>>& samples,
                     const FitConfig& config);

/// Max absolute coefficient difference over the shared exponent range;
/// exactly zero for identical exact series. Throws RangeMismatch when the
/// exponent ranges differ.
double series_residual(const AsymptoticSeries& a, const AsymptoticSeries& b);

}  // namespace specgeo
