#include "specgeo/fitting.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

#include "specgeo/errors.hpp"

namespace specgeo {

FitResult fit_series(const std::vector<std::pair<double, double>>& samples,
                     const FitConfig& config) {
  const long m = static_cast<long>(samples.size());
  const long n = static_cast<long>(config.exponents.size());
  if (n == 0) throw InsufficientSamples("fit_series: no basis exponents");
  {
    std::set<int> unique(config.exponents.begin(), config.exponents.end());
    if (static_cast<long>(unique.size()) != n)
      throw ValidationError("fit_series: duplicate exponents");
  }
  if (m < n + 2)
    throw InsufficientSamples("fit_series: need at least exponents + 2 samples");
  for (const auto& [t, y] : samples)
    if (!(t > 0.0) || !(y > 0.0))
      throw ValidationError("fit_series: samples must have positive t and value");

  Eigen::MatrixXd a(m, n);
  Eigen::VectorXd rhs(m);
  for (long i = 0; i < m; ++i) {
    double t = samples[i].first;
    double w = config.weighting == FitConfig::Weighting::Relative
                   ? 1.0 / samples[i].second
                   : 1.0;
    for (long j = 0; j < n; ++j)
      a(i, j) = w * std::pow(t, 0.5 * config.exponents[j]);
    rhs(i) = w * samples[i].second;
  }

  Eigen::VectorXd scale(n);
  for (long j = 0; j < n; ++j) {
    scale(j) = a.col(j).norm();
    if (scale(j) == 0.0) throw ValidationError("fit_series: zero basis column");
    a.col(j) /= scale(j);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
  double condition = diag.maxCoeff() / std::max(diag.minCoeff(), 1e-300);
  if (condition > config.condition_cap)
    throw IllConditioned("fit_series: condition estimate " + std::to_string(condition));

  Eigen::VectorXd solution = qr.solve(rhs);

  FitResult result;
  result.condition_estimate = condition;
  for (long j = 0; j < n; ++j)
    result.coefficients[config.exponents[j]] = solution(j) / scale(j);

  double acc = 0.0;
  for (long i = 0; i < m; ++i) {
    double t = samples[i].first, y = samples[i].second;
    double model = 0.0;
    for (long j = 0; j < n; ++j)
      model += result.coefficients[config.exponents[j]] * std::pow(t, 0.5 * config.exponents[j]);
    double rel = (model - y) / y;
    acc += rel * rel;
  }
  result.residual_norm = std::sqrt(acc / m);
  return result;
}

double series_residual(const AsymptoticSeries& a, const AsymptoticSeries& b) {
  if (a.min_n != b.min_n || a.max_n != b.max_n)
    throw RangeMismatch("series_residual: exponent ranges differ");
  if (a.exact() && b.exact()) {
    double worst = 0.0;
    for (int n = a.min_n; n <= a.max_n; ++n) {
      Scalar diff = a.at(n) - b.at(n);
      if (diff.is_zero()) continue;
      worst = std::max(worst, std::abs(diff.to_double()));
    }
    return worst;
  }
  double worst = 0.0;
  for (int n = a.min_n; n <= a.max_n; ++n)
    worst = std::max(worst, std::abs(a.at(n).to_double() - b.at(n).to_double()));
  return worst;
}

}  // namespace specgeo
