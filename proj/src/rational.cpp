#include "specgeo/rational.hpp"

#include <stdexcept>

namespace specgeo {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::from_decimal_string(const std::string& num,
                                       const std::string& den) {
  mpz_class n(num, 10), d(den, 10);
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  mpz_class n, d;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ae);
  if (e < 0) {
    if (n == 0) throw std::invalid_argument("Rational: 0 to negative power");
    return Rational(d, n);
  }
  return Rational(n, d);
}

bool Rational::sqrt_exact(Rational* out) const {
  if (sign() < 0) return false;
  if (is_zero()) {
    *out = Rational(0);
    return true;
  }
  mpz_class sn, sd;
  if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return false;
  mpz_sqrt(sn.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den().get_mpz_t());
  *out = Rational(sn, sd);
  return true;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

}  // namespace specgeo
