#pragma once

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "specgeo/rational.hpp"

namespace specgeo {

/// Memoized Bernoulli numbers B_k and values B_k(1/2). Append-only caches,
/// safe for concurrent readers with the internal lock serializing growth.
class BernoulliCache {
 public:
  static BernoulliCache& instance();

  Rational number(int k);
  Rational at_half(int k);

 private:
  BernoulliCache() { numbers_.push_back(Rational(1)); }
  void grow_to_locked(int k);

  std::mutex mu_;
  std::vector<Rational> numbers_;
  std::vector<Rational> half_values_;
};

/// B_k via the recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0, B_0 = 1.
Rational bernoulli_number(int k);

/// B_k(1/2) = (2^{1-k} - 1) B_k.
Rational bernoulli_at_half(int k);

/// Exact binomial coefficient; 0 when k > n or k < 0.
mpz_class binomial(long n, long k);

/// Exact factorial.
mpz_class factorial(long n);

/// Generalized binomial C(1/2, tau) as an exact rational.
Rational binomial_half(int tau);

}  // namespace specgeo
