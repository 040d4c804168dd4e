#include "specgeo/numkit.hpp"

#include <stdexcept>

namespace specgeo {

BernoulliCache& BernoulliCache::instance() {
  static BernoulliCache cache;
  return cache;
}

void BernoulliCache::grow_to_locked(int k) {
  while (static_cast<int>(numbers_.size()) <= k) {
    int n = static_cast<int>(numbers_.size());
    // sum_{j=0}^{n} C(n+1,j) B_j = 0  =>  B_n = -(1/(n+1)) sum_{j<n} C(n+1,j) B_j
    Rational s(0);
    for (int j = 0; j < n; ++j) {
      s += Rational(binomial(n + 1, j)) * numbers_[j];
    }
    numbers_.push_back(-s / Rational(n + 1));
  }
}

Rational BernoulliCache::number(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_number: k < 0");
  std::lock_guard<std::mutex> lock(mu_);
  grow_to_locked(k);
  return numbers_[k];
}

Rational BernoulliCache::at_half(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_at_half: k < 0");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(half_values_.size()) <= k) {
    int n = static_cast<int>(half_values_.size());
    grow_to_locked(n);
    // B_n(1/2) = (2^{1-n} - 1) B_n
    Rational factor = Rational(2).pow(1 - n) - Rational(1);
    half_values_.push_back(factor * numbers_[n]);
  }
  return half_values_[k];
}

Rational bernoulli_number(int k) { return BernoulliCache::instance().number(k); }

Rational bernoulli_at_half(int k) { return BernoulliCache::instance().at_half(k); }

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n < 0");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational binomial_half(int tau) {
  if (tau < 0) return Rational(0);
  // falling factorial (1/2)(1/2-1)...(1/2-tau+1) / tau!
  Rational num(1);
  Rational half(1, 2);
  for (int i = 0; i < tau; ++i) num *= half - Rational(i);
  return num / Rational(factorial(tau));
}

}  // namespace specgeo
