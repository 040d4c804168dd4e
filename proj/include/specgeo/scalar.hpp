#pragma once

#include <map>
#include <optional>
#include <string>

#include "specgeo/rational.hpp"

namespace specgeo {

/// Finite sum of terms c * pi^(h/2) with rational c and integer half-exponent
/// h. Closed under + - * and division by a monomial; exact comparisons.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[0] = c;
  }
  PiPoly(long n) : PiPoly(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static PiPoly monomial(const Rational& c, int pi_half_exp);
  static PiPoly pi() { return monomial(Rational(1), 2); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const;
  /// The rational part (coefficient of pi^0).
  Rational rational_part() const;

  PiPoly operator-() const;
  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  /// Division by a monomial divisor; throws otherwise.
  friend PiPoly operator/(const PiPoly& a, const PiPoly& b);
  friend bool operator==(const PiPoly& a, const PiPoly& b) {
    return a.terms_ == b.terms_;
  }

  PiPoly pow(long e) const;
  /// Exact square root of a monomial when representable.
  std::optional<PiPoly> sqrt_exact() const;

  double to_double() const;
  std::string to_string() const;

 private:
  void insert(int h, const Rational& c);
  std::map<int, Rational> terms_;  // pi_half_exp -> nonzero coefficient
};

/// A scalar that is either exact (PiPoly) or a double. Arithmetic stays exact
/// while both operands are exact and degrades to float otherwise.
class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(long n) : exact_(true), poly_(n) {}  // NOLINT
  Scalar(const Rational& r) : exact_(true), poly_(r) {}  // NOLINT
  Scalar(const PiPoly& p) : exact_(true), poly_(p) {}    // NOLINT
  Scalar(double v) : exact_(false), value_(v) {}         // NOLINT

  static Scalar pi() { return Scalar(PiPoly::pi()); }

  bool exact() const { return exact_; }
  const PiPoly& poly() const;
  double to_double() const { return exact_ ? poly_.to_double() : value_; }
  bool is_zero() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar pow(long e) const;
  /// Square root: exact when possible, float fallback otherwise.
  Scalar sqrt() const;
  /// 1/x (exact requires monomial).
  Scalar inverse() const;

  /// Exact equality; false whenever either side is float.
  bool identical(const Scalar& o) const;

  std::string to_string() const;

 private:
  bool exact_;
  PiPoly poly_;
  double value_ = 0.0;
};

}  // namespace specgeo
