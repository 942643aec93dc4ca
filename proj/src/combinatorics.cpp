#include "gldiff/combinatorics.hpp"

#include <algorithm>

#include "gldiff/errors.hpp"

namespace gldiff {

Rational gen_binomial(std::int64_t top, std::int64_t s) {
  if (s < 0) return Rational();
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::int64_t u = 0; u < s; ++u) {
    num *= mpz_class(static_cast<long>(top - u));
    den *= mpz_class(static_cast<long>(u + 1));
  }
  return Rational(mpq_class(num, den));
}

Poly falling_factorial(const Poly& x, unsigned j) {
  Poly r(1);
  for (unsigned u = 0; u < j; ++u) r *= x - Poly(static_cast<std::int64_t>(u));
  return r;
}

Rational falling_factorial(std::int64_t x, unsigned j) {
  mpz_class r = 1;
  for (unsigned u = 0; u < j; ++u) r *= mpz_class(static_cast<long>(x - u));
  return Rational(mpq_class(r));
}

std::vector<Rational> falling_to_power_coeffs(unsigned j) {
  // Multiply out D(D-1)...(D-j+1) one factor at a time.
  std::vector<Rational> c{Rational(1)};
  for (unsigned u = 0; u < j; ++u) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t s = 0; s < c.size(); ++s) {
      next[s + 1] += c[s];
      next[s] -= Rational(static_cast<std::int64_t>(u)) * c[s];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Rational> power_to_falling_coeffs(unsigned j) {
  // S(n,k) = k S(n-1,k) + S(n-1,k-1), one row at a time.
  std::vector<Rational> row{Rational(1)};
  for (unsigned n = 1; n <= j; ++n) {
    std::vector<Rational> next(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
      Rational prev_same = k < row.size() ? row[k] : Rational();
      next[k] = Rational(static_cast<std::int64_t>(k)) * prev_same + row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

SquareMatrixPoly jordan_shifted_power(const Poly& base, int m, unsigned j) {
  if (m < 1) throw DimensionError("Jordan block size must be positive");
  SquareMatrixPoly r(m);
  const unsigned top = std::min<unsigned>(j, static_cast<unsigned>(m - 1));
  for (unsigned s = 0; s <= top; ++s) {
    Poly c = gen_binomial(j, s) * base.pow(j - s);
    // J^s has ones on the s-th superdiagonal.
    for (int row = 0; row + static_cast<int>(s) < m; ++row)
      r.at(row, row + static_cast<int>(s)) = c;
  }
  return r;
}

}  // namespace gldiff
