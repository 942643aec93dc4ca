#include <doctest.h>

#include "gldiff/combinatorics.hpp"
#include "gldiff/errors.hpp"
#include "gldiff/matrix_poly.hpp"
#include "gldiff/poly.hpp"
#include "gldiff/rational.hpp"

using namespace gldiff;

namespace {

// x(x-1)...(x-j+1) by direct multiplication over the rationals.
Rational falling_at(const Rational& x, unsigned j) {
  Rational r(1);
  for (unsigned u = 0; u < j; ++u) r *= x - Rational(u);
  return r;
}

Rational power_at(const Rational& x, unsigned j) {
  Rational r(1);
  for (unsigned u = 0; u < j; ++u) r *= x;
  return r;
}

SquareMatrixPoly jordan_matrix(const Poly& base, int m) {
  SquareMatrixPoly a = base * SquareMatrixPoly::identity(m);
  for (int r = 0; r + 1 < m; ++r) a.at(r, r + 1) = Poly(1);
  return a;
}

}  // namespace

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(4, 2).is_integer());
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binomial(5, 2) == Rational(10));
  CHECK(gen_binomial(-1, 2) == Rational(1));
  CHECK(gen_binomial(3, -1) == Rational(0));
  CHECK(gen_binomial(2, 3) == Rational(0));
  CHECK(gen_binomial(-2, 3) == Rational(-4));
  CHECK(gen_binomial(7, 0) == Rational(1));

  // Pascal's rule holds for negative tops too.
  for (std::int64_t n = -12; n <= 12; ++n)
    for (std::int64_t s = 1; s <= 10; ++s)
      CHECK(gen_binomial(n, s) ==
            gen_binomial(n - 1, s) + gen_binomial(n - 1, s - 1));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Poly(4), 2) == Poly(12));
  CHECK(falling_factorial(Poly::indeterminate(), 0) == Poly(1));
  CHECK(falling_factorial(Poly(2), 3) == Poly(0));
  CHECK(falling_factorial(std::int64_t{-3}, 2) == Rational(12));
  Poly x = Poly::indeterminate();
  CHECK(falling_factorial(x, 2) == x * x - x);
}

TEST_CASE("Stirling conversions") {
  using V = std::vector<Rational>;
  CHECK(falling_to_power_coeffs(2) == V{0, -1, 1});
  CHECK(falling_to_power_coeffs(3) == V{0, 2, -3, 1});
  CHECK(falling_to_power_coeffs(0) == V{1});
  CHECK(power_to_falling_coeffs(2) == V{0, 1, 1});
  CHECK(power_to_falling_coeffs(1) == V{0, 1});
  CHECK(power_to_falling_coeffs(3) == V{0, 1, 3, 1});

  // Oracle: both expansions must agree with the products they describe at
  // j+2 sample points, which pins a degree-j polynomial.
  for (unsigned j = 0; j <= 12; ++j) {
    auto down = falling_to_power_coeffs(j);
    auto up = power_to_falling_coeffs(j);
    REQUIRE(down.size() == j + 1);
    REQUIRE(up.size() == j + 1);
    for (std::int64_t xi = -3; xi <= static_cast<std::int64_t>(j) + 2; ++xi) {
      Rational x(xi);
      Rational via_powers, via_falling;
      for (unsigned s = 0; s <= j; ++s) {
        via_powers += down[s] * power_at(x, s);
        via_falling += up[s] * falling_at(x, s);
      }
      CHECK(via_powers == falling_at(x, j));
      CHECK(via_falling == power_at(x, j));
    }
  }
}

TEST_CASE("Stirling conversions compose to the identity") {
  for (unsigned j = 0; j <= 12; ++j) {
    // D^j -> sum_s up_s [D]_s -> sum_s up_s sum_t down(s)_t D^t
    std::vector<Rational> back(j + 1);
    auto up = power_to_falling_coeffs(j);
    for (unsigned s = 0; s <= j; ++s) {
      auto down = falling_to_power_coeffs(s);
      for (unsigned t = 0; t <= s; ++t) back[t] += up[s] * down[t];
    }
    for (unsigned t = 0; t <= j; ++t)
      CHECK(back[t] == Rational(t == j ? 1 : 0));
  }
}

TEST_CASE("jordan shifted power") {
  Poly x = Poly::indeterminate();
  Poly lk = x + Poly(5);
  auto scalar = jordan_shifted_power(lk, 1, 3);
  CHECK(scalar.at(0, 0) == lk.pow(3));

  auto two = jordan_shifted_power(x, 2, 2);
  CHECK(two.at(0, 0) == x * x);
  CHECK(two.at(0, 1) == Poly(2) * x);
  CHECK(two.at(1, 0) == Poly(0));
  CHECK(two.at(1, 1) == x * x);

  CHECK(jordan_shifted_power(x, 3, 0) == SquareMatrixPoly::identity(3));

  // Oracle: repeated multiplication by the Jordan matrix.
  for (int m = 1; m <= 4; ++m) {
    SquareMatrixPoly acc = SquareMatrixPoly::identity(m);
    for (unsigned j = 0; j <= 6; ++j) {
      CHECK(jordan_shifted_power(lk, m, j) == acc);
      acc = acc * jordan_matrix(lk, m);
    }
  }

  for (unsigned j1 = 0; j1 <= 4; ++j1)
    for (unsigned j2 = 0; j2 <= 4; ++j2)
      CHECK(jordan_shifted_power(x, 3, j1 + j2) ==
            jordan_shifted_power(x, 3, j1) * jordan_shifted_power(x, 3, j2));

  CHECK_THROWS_AS(jordan_shifted_power(x, 0, 1), DimensionError);
}

TEST_CASE("matrix operations") {
  CHECK(SquareMatrixPoly::unit(2, 1, 2) * SquareMatrixPoly::unit(2, 2, 1) ==
        SquareMatrixPoly::unit(2, 1, 1));
  CHECK(SquareMatrixPoly::identity(4).trace() == Poly(4));
  CHECK(SquareMatrixPoly::unit(2, 1, 2).transpose() ==
        SquareMatrixPoly::unit(2, 2, 1));
  CHECK((SquareMatrixPoly::unit(2, 1, 1) + SquareMatrixPoly::unit(2, 2, 2)) ==
        SquareMatrixPoly::identity(2));
  CHECK_THROWS_AS(SquareMatrixPoly::identity(2) * SquareMatrixPoly::identity(3),
                  DimensionError);
  CHECK_THROWS_AS(SquareMatrixPoly::unit(2, 3, 1), DimensionError);
}

TEST_CASE("polynomials") {
  Poly x = Poly::indeterminate();
  Poly p = x * x - Poly(Rational(3, 2)) * x + Poly(1);
  CHECK(p.str() == "a^2 - 3/2 a + 1");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.evaluate(Rational(2)) == Rational(2));
  CHECK((-x).str() == "-a");
  CHECK(Poly().str() == "0");
  CHECK_THROWS_AS(x.constant_value(), DomainError);
  // leading coefficient never zero
  Poly q = x + Poly(1) - x;
  CHECK(q.degree() == 0);
  CHECK(q.coefficients().size() == 1);
}
