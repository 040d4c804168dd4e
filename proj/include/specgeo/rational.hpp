#pragma once

#include <gmpxx.h>

#include <string>

namespace specgeo {

/// Exact rational number, always reduced, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n, const mpz_class& d);

  static Rational from_decimal_string(const std::string& num,
                                      const std::string& den);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string num_string() const { return q_.get_num().get_str(); }
  std::string den_string() const { return q_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Exact square root if this is a perfect rational square and >= 0.
  bool sqrt_exact(Rational* out) const;

  std::string to_string() const;

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;  // kept canonical
};

}  // namespace specgeo
