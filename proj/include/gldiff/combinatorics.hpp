#pragma once

#include <cstdint>
#include <vector>

#include "gldiff/matrix_poly.hpp"
#include "gldiff/poly.hpp"
#include "gldiff/rational.hpp"

namespace gldiff {

/// Generalized binomial top(top-1)...(top-s+1)/s!, valid for negative `top`;
/// zero when s < 0.
Rational gen_binomial(std::int64_t top, std::int64_t s);

/// x(x-1)...(x-j+1); the empty product (j = 0) is 1.
Poly falling_factorial(const Poly& x, unsigned j);

/// Integer specialization of falling_factorial.
Rational falling_factorial(std::int64_t x, unsigned j);

/// c_0..c_j with [D]_j = sum_s c_s D^s (signed Stirling numbers of the
/// first kind).
std::vector<Rational> falling_to_power_coeffs(unsigned j);

/// c_0..c_j with D^j = sum_s c_s [D]_s (Stirling numbers of the second kind).
std::vector<Rational> power_to_falling_coeffs(unsigned j);

/// (base * id + J)^j where J is the m x m nilpotent Jordan block with ones on
/// the superdiagonal. Expanded as sum_s C(j,s) base^(j-s) J^s, s < m.
SquareMatrixPoly jordan_shifted_power(const Poly& base, int m, unsigned j);

}  // namespace gldiff
