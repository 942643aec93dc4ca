#pragma once

#include <cstdint>
#include <map>

#include "gldiff/element.hpp"

namespace gldiff {

/// Associative product of matrix differential operators,
///   (t^i D^j A)(t^k D^l B) = t^(i+k) (D+k)^j D^l AB,
/// extended bilinearly. Central parts are ignored; the result has none.
AlgebraElement canonical_product(const AlgebraElement& a,
                                 const AlgebraElement& b);

/// Commutator of canonical_product. Zero central part.
AlgebraElement plain_bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Bracket of the universal central extension: plain_bracket with the
/// central part set to cocycle_psi(a, b).
AlgebraElement central_bracket(const AlgebraElement& a,
                               const AlgebraElement& b);

/// Rewrite in the falling basis t^i [D]_j. Central part passes through.
FallingElement to_falling(const AlgebraElement& a);
/// Inverse of to_falling.
AlgebraElement from_falling(const FallingElement& f);

/// The 2-cocycle of the central extension. On falling-basis words,
///   psi(t^i[D]_j E_pq, t^k[D]_l E_p'q')
///     = delta_{i,-k} (-1)^j j! l! C(i+j, j+l+1) tr(E_pq E_p'q').
/// Central parts of the inputs contribute nothing.
Rational cocycle_psi(const AlgebraElement& a, const AlgebraElement& b);
Rational cocycle_psi(const FallingElement& a, const FallingElement& b);

/// Centrally extended bracket computed entirely in the falling basis, using
/// the Leibniz expansion of t^(i+j)(d/dt)^j against t^(k+l)(d/dt)^l.
FallingElement bracket_falling_direct(const FallingElement& a,
                                      const FallingElement& b);

/// Principal gradation: deg(t^k D^j E_{p,q}) = kN + p - q.
std::int64_t degree(const Monomial& m, int rank);

/// Splits an element by degree. The central part lands in degree 0. The
/// zero element has no components.
std::map<std::int64_t, AlgebraElement> homogeneous_components(
    const AlgebraElement& a);

/// The order-two automorphism
///   sigma(t^i D^j A) = (-1)^(j+1) t^i (D+i)^j A^T.
/// Defined on central-free elements only; throws DomainError otherwise.
AlgebraElement sigma(const AlgebraElement& a);

/// t^i D^j times the identity matrix.
AlgebraElement embed_scalar(std::int64_t i, std::int64_t j, int rank);

}  // namespace gldiff
