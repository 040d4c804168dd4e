#include "specgeo/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specgeo {

PiPoly PiPoly::monomial(const Rational& c, int pi_half_exp) {
  PiPoly p;
  if (!c.is_zero()) p.terms_[pi_half_exp] = c;
  return p;
}

bool PiPoly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiPoly::rational_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PiPoly::insert(int h, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(h, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiPoly PiPoly::operator-() const {
  PiPoly r;
  for (const auto& [h, c] : terms_) r.terms_[h] = -c;
  return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [h, c] : o.terms_) insert(h, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [h, c] : o.terms_) insert(h, -c);
  return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  for (const auto& [ha, ca] : a.terms_)
    for (const auto& [hb, cb] : b.terms_) r.insert(ha + hb, ca * cb);
  return r;
}

PiPoly operator/(const PiPoly& a, const PiPoly& b) {
  if (!b.is_monomial())
    throw std::invalid_argument("PiPoly: division requires monomial divisor");
  auto [hb, cb] = *b.terms_.begin();
  PiPoly r;
  for (const auto& [ha, ca] : a.terms_) r.insert(ha - hb, ca / cb);
  return r;
}

PiPoly PiPoly::pow(long e) const {
  if (e == 0) return PiPoly(Rational(1));
  if (e < 0) {
    if (!is_monomial()) throw std::invalid_argument("PiPoly: negative power of non-monomial");
    auto [h, c] = *terms_.begin();
    return monomial(c.pow(e), static_cast<int>(h * e));
  }
  if (is_monomial()) {
    auto [h, c] = *terms_.begin();
    return monomial(c.pow(e), static_cast<int>(h * e));
  }
  PiPoly r(Rational(1));
  for (long i = 0; i < e; ++i) r = r * (*this);
  return r;
}

std::optional<PiPoly> PiPoly::sqrt_exact() const {
  if (is_zero()) return PiPoly();
  if (!is_monomial()) return std::nullopt;
  auto [h, c] = *terms_.begin();
  if (h % 2 != 0) return std::nullopt;
  Rational root;
  if (!c.sqrt_exact(&root)) return std::nullopt;
  return monomial(root, h / 2);
}

double PiPoly::to_double() const {
  constexpr double kPi = 3.14159265358979323846264338327950288;
  constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
  double v = 0.0;
  for (const auto& [h, c] : terms_) {
    double p = std::pow(kPi, h / 2);
    if (h % 2 != 0) p *= (h > 0) ? kSqrtPi : 1.0 / kSqrtPi;
    v += c.to_double() * p;
  }
  return v;
}

std::string PiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << " + ";
    os << c.to_string();
    if (h != 0) os << "*pi^(" << h << "/2)";
    first = false;
  }
  return os.str();
}

const PiPoly& Scalar::poly() const {
  if (!exact_) throw std::logic_error("Scalar: poly() on float value");
  return poly_;
}

bool Scalar::is_zero() const { return exact_ ? poly_.is_zero() : value_ == 0.0; }

Scalar Scalar::operator-() const {
  return exact_ ? Scalar(-poly_) : Scalar(-value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(a.poly_ + b.poly_);
  return Scalar(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(a.poly_ - b.poly_);
  return Scalar(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(a.poly_ * b.poly_);
  return Scalar(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_ && b.poly_.is_monomial())
    return Scalar(a.poly_ / b.poly_);
  return Scalar(a.to_double() / b.to_double());
}

Scalar Scalar::pow(long e) const {
  if (exact_) return Scalar(poly_.pow(e));
  return Scalar(std::pow(value_, static_cast<double>(e)));
}

Scalar Scalar::sqrt() const {
  if (exact_) {
    if (auto r = poly_.sqrt_exact()) return Scalar(*r);
  }
  return Scalar(std::sqrt(to_double()));
}

Scalar Scalar::inverse() const {
  if (exact_ && poly_.is_monomial()) return Scalar(PiPoly(Rational(1)) / poly_);
  return Scalar(1.0 / to_double());
}

bool Scalar::identical(const Scalar& o) const {
  return exact_ && o.exact_ && poly_ == o.poly_;
}

std::string Scalar::to_string() const {
  if (exact_) return poly_.to_string();
  char buf[40];
  snprintf(buf, sizeof(buf), "%.17g", value_);
  return buf;
}

}  // namespace specgeo
