#include "gldiff/poly.hpp"

#include <algorithm>

#include "gldiff/errors.hpp"

namespace gldiff {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Poly Poly::indeterminate() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coefficient, std::size_t exponent) {
  std::vector<Rational> c(exponent + 1);
  c[exponent] = coefficient;
  return Poly(std::move(c));
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
  return coeff(0);
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Poly::str(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const Rational& c = coeffs_[n];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (n == 0) {
      out += mag.str();
      continue;
    }
    if (!unit) out += mag.str() + " ";
    out += variable;
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
      r[a + b] += coeffs_[a] * o.coeffs_[b];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace gldiff
