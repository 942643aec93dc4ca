#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "gldiff/errors.hpp"
#include "gldiff/rational.hpp"

namespace gldiff {

/// Basis word t^i D^j E_{p,q}. Whether j counts powers D^j or falling
/// factorials [D]_j depends on the element type that holds it.
struct Monomial {
  std::int64_t i = 0;
  std::int64_t j = 0;
  int p = 1;
  int q = 1;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Basis { power, falling };

/// Finite linear combination of basis words plus a coefficient of the
/// central element C. Terms are kept in lexicographic (i, j, p, q) order and
/// zero coefficients are never stored.
template <Basis B>
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;
  static constexpr Basis basis = B;

  explicit Element(int rank) : rank_(rank) {
    if (rank < 1) throw DimensionError("rank must be positive");
  }

  static Element monomial(int rank, const Monomial& m,
                          const Rational& coeff = Rational(1)) {
    Element e(rank);
    e.add_term(m, coeff);
    return e;
  }

  static Element central_unit(int rank, const Rational& coeff = Rational(1)) {
    Element e(rank);
    e.add_central(coeff);
    return e;
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  const Rational& central() const { return central_; }
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add_term(const Monomial& m, const Rational& coeff) {
    if (m.j < 0) throw DomainError("negative D exponent");
    if (m.p < 1 || m.p > rank_ || m.q < 1 || m.q > rank_)
      throw DimensionError("E[" + std::to_string(m.p) + "," +
                           std::to_string(m.q) + "] outside gl_" +
                           std::to_string(rank_));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_central(const Rational& coeff) { central_ += coeff; }
  void set_central(const Rational& coeff) { central_ = coeff; }

  Element without_central() const {
    Element e = *this;
    e.central_ = Rational();
    return e;
  }

  Element& operator+=(const Element& o) {
    require_same_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    central_ += o.central_;
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    central_ -= o.central_;
    return *this;
  }
  Element& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      central_ = Rational();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    central_ *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  Element operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Element& a, const Element& b) = default;

  void require_same_rank(const Element& o) const {
    if (o.rank_ != rank_)
      throw DimensionError("rank mismatch: " + std::to_string(rank_) + " vs " +
                           std::to_string(o.rank_));
  }

 private:
  int rank_;
  Terms terms_;
  Rational central_;
};

using AlgebraElement = Element<Basis::power>;
using FallingElement = Element<Basis::falling>;

}  // namespace gldiff
