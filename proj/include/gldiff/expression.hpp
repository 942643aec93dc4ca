#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gldiff/element.hpp"
#include "gldiff/module.hpp"
#include "gldiff/poly.hpp"

namespace gldiff {

// Text grammar (whitespace-insensitive):
//
//   element  := [sign] term (sign term)*
//   term     := [rational ['*']] atom*        at least one of the two
//   atom     := 't' ['^' int] | 'D' ['^' n] | 'FD' ['^' n]
//             | 'E[' p ',' q ']' | 'C'
//   vector   := [sign] vterm (sign vterm)*
//   vterm    := [coef ['*']] 'v[' k ',' r [',' s] ']'
//   coef     := factor ('*'? factor)*
//   factor   := rational | 'a' ['^' n] | '(' poly ')'
//   poly     := [sign] coef (sign coef)*
//
// A term is the coefficient times the ordered product of its atoms, so
// "t^i D^j E[p,q]" is exactly that basis word and "D t" is tD + t. A term
// without E atoms carries the identity matrix. FD^j is the falling factorial
// [D]_j and is rewritten in powers of D on entry. C is the central element
// and must stand alone in its term.

AlgebraElement parse_element(std::string_view text, int rank);
ModuleVector parse_vector(std::string_view text, const ModuleParams& params);
Poly parse_poly(std::string_view text);

/// Canonical text: terms in lexicographic (i, j, p, q) order, then C.
/// For rank 1 the E[1,1] atom is omitted unless the term has no other atom.
std::string print_element(const AlgebraElement& a);
/// Same layout with FD atoms.
std::string print_falling(const FallingElement& f);
std::string print_vector(const ModuleVector& v);

nlohmann::json to_json(const AlgebraElement& a);
nlohmann::json to_json(const FallingElement& f);
nlohmann::json to_json(const ModuleVector& v);
/// Ascending coefficient array of rational strings.
nlohmann::json to_json(const Poly& p);

}  // namespace gldiff
