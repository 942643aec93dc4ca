#pragma once

#include <string>
#include <vector>

#include "gldiff/rational.hpp"

namespace gldiff {

/// Univariate polynomial over Rational in one formal indeterminate.
///
/// The indeterminate stands for the module parameter (alpha, or the Jordan
/// eigenvalue lambda) and is spelled `a` in text. Coefficients are stored by
/// ascending exponent with no trailing zeros, so the zero polynomial has an
/// empty coefficient list and equality is coefficient-wise.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coefficients);

  /// The indeterminate `a`.
  static Poly indeterminate();
  static Poly monomial(const Rational& coefficient, std::size_t exponent);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of a^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Constant term; throws DomainError if the polynomial is not constant.
  Rational constant_value() const;

  Rational evaluate(const Rational& x) const;
  Poly pow(unsigned exponent) const;

  /// Human-readable form in descending powers, e.g. "a^2 - 3/2 a + 1".
  std::string str(char variable = 'a') const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace gldiff
