#include "gldiff/algebra.hpp"

#include "gldiff/combinatorics.hpp"
#include "gldiff/mutation.hpp"

namespace gldiff {

using detail::kMutant;
using detail::Mutant;

namespace {

Rational power_of(std::int64_t base, std::int64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(static_cast<long>(base)).get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(mpq_class(r));
}

Rational factorial(std::int64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(r));
}

// Linear map on terms that rewrites the j index through a coefficient table.
template <Basis To, Basis From>
Element<To> rebase(const Element<From>& a,
                   std::vector<Rational> (*table)(unsigned)) {
  Element<To> r(a.rank());
  for (const auto& [m, c] : a.terms()) {
    auto coeffs = table(static_cast<unsigned>(m.j));
    for (std::size_t s = 0; s < coeffs.size(); ++s)
      r.add_term({m.i, static_cast<std::int64_t>(s), m.p, m.q}, c * coeffs[s]);
  }
  r.set_central(a.central());
  return r;
}

}  // namespace

AlgebraElement canonical_product(const AlgebraElement& a,
                                 const AlgebraElement& b) {
  a.require_same_rank(b);
  AlgebraElement r(a.rank());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      if (x.q != y.p) continue;
      const Rational c = cx * cy;
      const std::int64_t shift = kMutant == Mutant::product_shift ? x.i : y.i;
      const std::int64_t top =
          kMutant == Mutant::product_binomial ? 0 : x.j;
      for (std::int64_t s = 0; s <= top; ++s) {
        r.add_term({x.i + y.i, x.j + y.j - s, x.p, y.q},
                   c * gen_binomial(x.j, s) * power_of(shift, s));
      }
    }
  }
  return r;
}

AlgebraElement plain_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return canonical_product(a, b) - canonical_product(b, a);
}

AlgebraElement central_bracket(const AlgebraElement& a,
                               const AlgebraElement& b) {
  AlgebraElement r = plain_bracket(a, b);
  r.set_central(cocycle_psi(a, b));
  return r;
}

FallingElement to_falling(const AlgebraElement& a) {
  return rebase<Basis::falling>(a, &power_to_falling_coeffs);
}

AlgebraElement from_falling(const FallingElement& f) {
  return rebase<Basis::power>(f, &falling_to_power_coeffs);
}

Rational cocycle_psi(const FallingElement& a, const FallingElement& b) {
  a.require_same_rank(b);
  Rational total;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      // tr(E_{p,q} E_{p',q'}) = delta_{q,p'} delta_{p,q'}
      if (x.i != -y.i || x.q != y.p || x.p != y.q) continue;
      const std::int64_t top =
          kMutant == Mutant::cocycle_top ? x.i + x.j + 1 : x.i + x.j;
      Rational binom = gen_binomial(top, x.j + y.j + 1);
      if (binom.is_zero()) continue;
      Rational v = factorial(x.j) * factorial(y.j) * binom;
      if (kMutant != Mutant::cocycle_sign && x.j % 2 != 0) v = -v;
      total += cx * cy * v;
    }
  }
  return total;
}

Rational cocycle_psi(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_rank(b);
  return cocycle_psi(to_falling(a), to_falling(b));
}

FallingElement bracket_falling_direct(const FallingElement& a,
                                      const FallingElement& b) {
  a.require_same_rank(b);
  FallingElement r(a.rank());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      const Rational c = cx * cy;
      // t^i[D]_j = t^(i+j) (d/dt)^j, so (d/dt)^j meets t^(k+l) and
      // (d/dt)^l meets t^(i+j).
      const std::int64_t i = x.i + y.i;
      if (x.q == y.p) {
        for (std::int64_t s = 0; s <= x.j; ++s)
          r.add_term({i, x.j + y.j - s, x.p, y.q},
                     c * gen_binomial(x.j, s) *
                         falling_factorial(y.i + y.j, static_cast<unsigned>(s)));
      }
      if (y.q == x.p) {
        for (std::int64_t s = 0; s <= y.j; ++s)
          r.add_term({i, x.j + y.j - s, y.p, x.q},
                     -c * gen_binomial(y.j, s) *
                         falling_factorial(x.i + x.j, static_cast<unsigned>(s)));
      }
      if (x.i == -y.i && x.q == y.p && x.p == y.q) {
        Rational v = factorial(x.j) * factorial(y.j) *
                     gen_binomial(x.i + x.j, x.j + y.j + 1);
        if (x.j % 2 != 0) v = -v;
        r.add_central(c * v);
      }
    }
  }
  return r;
}

std::int64_t degree(const Monomial& m, int rank) {
  if constexpr (kMutant == Mutant::degree_sign)
    return m.i * rank + m.p + m.q;
  return m.i * rank + m.p - m.q;
}

std::map<std::int64_t, AlgebraElement> homogeneous_components(
    const AlgebraElement& a) {
  std::map<std::int64_t, AlgebraElement> out;
  auto slot = [&](std::int64_t d) -> AlgebraElement& {
    return out.try_emplace(d, a.rank()).first->second;
  };
  for (const auto& [m, c] : a.terms()) slot(degree(m, a.rank())).add_term(m, c);
  if (!a.central().is_zero()) slot(0).add_central(a.central());
  return out;
}

AlgebraElement sigma(const AlgebraElement& a) {
  if (!a.central().is_zero())
    throw DomainError("sigma is defined only on central-free elements");
  AlgebraElement r(a.rank());
  for (const auto& [m, c] : a.terms()) {
    const Rational sign = m.j % 2 == 0 ? Rational(-1) : Rational(1);
    const std::int64_t shift = kMutant == Mutant::sigma_shift ? 0 : m.i;
    // (D+i)^j = sum_s C(j,s) i^(j-s) D^s
    for (std::int64_t s = 0; s <= m.j; ++s)
      r.add_term({m.i, s, m.q, m.p},
                 sign * c * gen_binomial(m.j, s) * power_of(shift, m.j - s));
  }
  return r;
}

AlgebraElement embed_scalar(std::int64_t i, std::int64_t j, int rank) {
  AlgebraElement r(rank);
  for (int p = 1; p <= rank; ++p) r.add_term({i, j, p, p}, Rational(1));
  return r;
}

}  // namespace gldiff
