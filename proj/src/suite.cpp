#include "gldiff/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "gldiff/algebra.hpp"
#include "gldiff/combinatorics.hpp"
#include "gldiff/expression.hpp"

namespace gldiff {

// ---------------------------------------------------------------------------
// Sampling

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

Rational sample_coeff(SampleRng& rng) {
  std::int64_t n = rng.uniform(1, 3);
  if (rng.uniform(0, 1) == 0) n = -n;
  return Rational(n, rng.uniform(1, 3));
}

Poly sample_linear_poly(SampleRng& rng) {
  Rational c0(rng.uniform(-3, 3), rng.uniform(1, 3));
  Rational c1(rng.uniform(-3, 3), rng.uniform(1, 3));
  if (c0.is_zero() && c1.is_zero()) c0 = Rational(1);
  return Poly(std::vector<Rational>{c0, c1});
}

}  // namespace

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = (UINT64_MAX / span) * span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

SampleRng stream_rng(std::uint64_t seed, std::string_view stream,
                     std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ fnv1a(stream));
  s = splitmix64(s ^ index);
  return SampleRng(s);
}

Monomial sample_monomial(const SampleBox& box, SampleRng& rng) {
  Monomial m;
  m.i = rng.uniform(-box.i_bound, box.i_bound);
  m.j = rng.uniform(0, box.j_bound);
  m.p = static_cast<int>(rng.uniform(1, box.rank));
  m.q = static_cast<int>(rng.uniform(1, box.rank));
  return m;
}

AlgebraElement sample_element(const SampleBox& box, SampleRng& rng,
                              bool with_central) {
  AlgebraElement a(box.rank);
  const std::int64_t n = rng.uniform(1, 3);
  for (std::int64_t t = 0; t < n; ++t) {
    Monomial m = sample_monomial(box, rng);
    a.add_term(m, sample_coeff(rng));
  }
  if (with_central && rng.uniform(0, 1) == 1) a.add_central(sample_coeff(rng));
  return a;
}

FallingElement sample_falling_element(const SampleBox& box, SampleRng& rng) {
  FallingElement f(box.rank);
  const std::int64_t n = rng.uniform(1, 3);
  for (std::int64_t t = 0; t < n; ++t) {
    Monomial m = sample_monomial(box, rng);
    f.add_term(m, sample_coeff(rng));
  }
  return f;
}

AlgebraElement sample_homogeneous_element(const SampleBox& box,
                                          SampleRng& rng) {
  const Monomial first = sample_monomial(box, rng);
  const std::int64_t d = degree(first, box.rank);
  std::vector<Monomial> same;
  for (std::int64_t k = -box.i_bound; k <= box.i_bound; ++k)
    for (int p = 1; p <= box.rank; ++p)
      for (int q = 1; q <= box.rank; ++q)
        if (degree({k, 0, p, q}, box.rank) == d) same.push_back({k, 0, p, q});
  AlgebraElement a(box.rank);
  a.add_term(first, sample_coeff(rng));
  const std::int64_t extra = rng.uniform(0, 2);
  for (std::int64_t t = 0; t < extra; ++t) {
    Monomial m = same[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(same.size()) - 1))];
    m.j = rng.uniform(0, box.j_bound);
    a.add_term(m, sample_coeff(rng));
  }
  return a;
}

ModuleVector sample_module_vector(const ModuleParams& params,
                                  const SampleBox& box, SampleRng& rng) {
  ModuleVector v(params);
  const std::int64_t n = rng.uniform(1, 3);
  for (std::int64_t t = 0; t < n; ++t) {
    Slot s;
    s.k = rng.uniform(-box.i_bound, box.i_bound);
    s.r = static_cast<int>(rng.uniform(1, params.rank));
    s.s = static_cast<int>(rng.uniform(1, params.m));
    v.add(s, sample_linear_poly(rng));
  }
  if (v.is_zero()) v.add({0, 1, 1}, Poly(1));
  return v;
}

ModuleVector sample_homogeneous_vector(const ModuleParams& params,
                                       const SampleBox& box, SampleRng& rng) {
  Slot s;
  s.k = rng.uniform(-box.i_bound, box.i_bound);
  s.r = static_cast<int>(rng.uniform(1, params.rank));
  s.s = static_cast<int>(rng.uniform(1, params.m));
  return ModuleVector::basis(params, s, sample_linear_poly(rng));
}

// ---------------------------------------------------------------------------
// Checks

namespace {

using Outcome = std::optional<std::string>;

struct Batch {
  std::string stream;
  std::int64_t count = 0;
  std::function<Outcome(SampleRng&, std::int64_t)> run;
};

struct CheckSpec {
  const char* name;
  std::function<std::vector<Batch>(const SuiteConfig&)> build;
};

constexpr std::int64_t kGradeBound = 100;

std::string describe(
    std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out;
  for (const auto& [label, value] : fields) {
    if (!out.empty()) out += "; ";
    out += label;
    out += " = ";
    out += value;
  }
  return out;
}

SampleBox box_for(const SuiteConfig& c, int rank) {
  return {rank, c.i_bound, c.j_bound};
}

std::string rank_stream(int n) { return "N=" + std::to_string(n); }

std::string module_stream(int n, Family f, int m) {
  return rank_stream(n) + "/" + family_name(f) + "/m=" + std::to_string(m);
}

// One batch of `samples` random cases per rank.
std::vector<Batch> per_rank(
    const SuiteConfig& c,
    std::function<Outcome(const SampleBox&, SampleRng&)> body) {
  std::vector<Batch> out;
  for (int n : c.ranks) {
    SampleBox box = box_for(c, n);
    out.push_back({rank_stream(n), c.samples,
                   [box, body](SampleRng& rng, std::int64_t) {
                     return body(box, rng);
                   }});
  }
  return out;
}

AlgebraElement jacobi_sum(
    const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c,
    AlgebraElement (*br)(const AlgebraElement&, const AlgebraElement&)) {
  return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b));
}

Outcome jacobi_case(const SampleBox& box, SampleRng& rng,
                    AlgebraElement (*br)(const AlgebraElement&,
                                         const AlgebraElement&),
                    bool with_central) {
  auto a = sample_element(box, rng, with_central);
  auto b = sample_element(box, rng, with_central);
  auto c = sample_element(box, rng, with_central);
  auto sum = jacobi_sum(a, b, c, br);
  if (sum.is_zero()) return std::nullopt;
  return describe({{"a", print_element(a)},
                   {"b", print_element(b)},
                   {"c", print_element(c)},
                   {"cyclic sum", print_element(sum)}});
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> all = {
      {"antisymmetry",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto a = sample_element(box, rng, true);
           auto b = sample_element(box, rng, true);
           auto ab = central_bracket(a, b);
           auto ba = central_bracket(b, a);
           if (ab == -ba) return std::nullopt;
           return describe({{"a", print_element(a)},
                            {"b", print_element(b)},
                            {"[a,b]", print_element(ab)},
                            {"[b,a]", print_element(ba)}});
         });
       }},
      {"associativity",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto a = sample_element(box, rng);
           auto b = sample_element(box, rng);
           auto d = sample_element(box, rng);
           auto left = canonical_product(canonical_product(a, b), d);
           auto right = canonical_product(a, canonical_product(b, d));
           if (left == right) return std::nullopt;
           return describe({{"a", print_element(a)},
                            {"b", print_element(b)},
                            {"c", print_element(d)},
                            {"(ab)c", print_element(left)},
                            {"a(bc)", print_element(right)}});
         });
       }},
      {"basis-agreement",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto f = sample_falling_element(box, rng);
           auto g = sample_falling_element(box, rng);
           auto direct = bracket_falling_direct(f, g);
           auto via_power =
               to_falling(central_bracket(from_falling(f), from_falling(g)));
           if (direct == via_power) return std::nullopt;
           return describe({{"a", print_falling(f)},
                            {"b", print_falling(g)},
                            {"direct", print_falling(direct)},
                            {"via power basis", print_falling(via_power)}});
         });
       }},
      {"central-jacobi",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) {
           return jacobi_case(box, rng, &central_bracket, true);
         });
       }},
      {"cocycle-identity",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto a = sample_element(box, rng);
           auto b = sample_element(box, rng);
           auto d = sample_element(box, rng);
           Rational s = cocycle_psi(plain_bracket(a, b), d) +
                        cocycle_psi(plain_bracket(b, d), a) +
                        cocycle_psi(plain_bracket(d, a), b);
           if (s.is_zero()) return std::nullopt;
           return describe({{"a", print_element(a)},
                            {"b", print_element(b)},
                            {"c", print_element(d)},
                            {"cyclic psi sum", s.str()}});
         });
       }},
      {"cocycle-spot-values",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks) {
           out.push_back(
               {rank_stream(n), 3, [n](SampleRng&, std::int64_t idx) -> Outcome {
                  AlgebraElement a(n), b(n);
                  Rational expected;
                  if (idx == 0) {
                    a = embed_scalar(1, 0, n);
                    b = embed_scalar(-1, 0, n);
                    expected = Rational(n);
                  } else if (idx == 1) {
                    FallingElement fa(n), fb(n);
                    for (int p = 1; p <= n; ++p) {
                      fa.add_term({1, 1, p, p}, 1);
                      fb.add_term({-1, 1, p, p}, 1);
                    }
                    a = from_falling(fa);
                    b = from_falling(fb);
                  } else {
                    a = AlgebraElement::monomial(n, {2, 0, 1, 1});
                    b = AlgebraElement::monomial(n, {3, 0, 1, 1});
                  }
                  Rational got = cocycle_psi(a, b);
                  if (got == expected) return std::nullopt;
                  return describe({{"a", print_element(a)},
                                   {"b", print_element(b)},
                                   {"psi", got.str()},
                                   {"expected", expected.str()}});
                }});
         }
         return out;
       }},
      {"d-adjoint-grading",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         const std::int64_t width = c.j_bound + 1;
         const std::int64_t ib = c.i_bound;
         for (int n : c.ranks) {
           out.push_back(
               {rank_stream(n), (2 * ib + 1) * width,
                [n, width, ib](SampleRng&, std::int64_t idx) -> Outcome {
                  const std::int64_t i = idx / width - ib;
                  const std::int64_t j = idx % width;
                  FallingElement word(n);
                  for (int p = 1; p <= n; ++p) word.add_term({i, j, p, p}, 1);
                  auto x = from_falling(word);
                  auto lhs = central_bracket(embed_scalar(0, 1, n), x);
                  auto rhs = Rational(i) * x;
                  if (lhs == rhs) return std::nullopt;
                  return describe({{"x", print_falling(word)},
                                   {"[D,x]", print_element(lhs)},
                                   {"expected", print_element(rhs)}});
                }});
         }
         return out;
       }},
      {"de-te-bracket",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks) {
           out.push_back(
               {rank_stream(n), std::int64_t{n} * n * n * n,
                [n](SampleRng&, std::int64_t idx) -> Outcome {
                  const int p = static_cast<int>(idx % n) + 1;
                  const int q = static_cast<int>(idx / n % n) + 1;
                  const int p2 = static_cast<int>(idx / n / n % n) + 1;
                  const int q2 = static_cast<int>(idx / n / n / n) + 1;
                  auto x = AlgebraElement::monomial(n, {0, 1, p, q});
                  auto y = AlgebraElement::monomial(n, {1, 0, p2, q2});
                  AlgebraElement expected(n);
                  if (q == p2) {
                    expected.add_term({1, 0, p, q2}, 1);
                    expected.add_term({1, 1, p, q2}, 1);
                  }
                  if (q2 == p) expected.add_term({1, 1, p2, q}, -1);
                  auto got = central_bracket(x, y);
                  if (got == expected) return std::nullopt;
                  return describe({{"x", print_element(x)},
                                   {"y", print_element(y)},
                                   {"[x,y]", print_element(got)},
                                   {"expected", print_element(expected)}});
                }});
         }
         return out;
       }},
      {"grade-bijection",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks) {
           for (Family f : {Family::V, Family::Vbar}) {
             out.push_back(
                 {rank_stream(n) + "/" + family_name(f), 2 * kGradeBound + 1,
                  [n, f](SampleRng&, std::int64_t idx) -> Outcome {
                    const std::int64_t g = idx - kGradeBound;
                    auto [k, r] = slot_of_grade(f, n, g);
                    // Count the slots of this grade near k = g / N.
                    int hits = 0;
                    for (std::int64_t kk = g / n - 2; kk <= g / n + 2; ++kk)
                      for (int rr = 1; rr <= n; ++rr)
                        if (grade_index(f, n, kk, rr) == g) ++hits;
                    const bool ok = r >= 1 && r <= n &&
                                    grade_index(f, n, k, r) == g && hits == 1;
                    if (ok) return std::nullopt;
                    return describe({{"family", family_name(f)},
                                     {"N", std::to_string(n)},
                                     {"grade", std::to_string(g)},
                                     {"slot", "(" + std::to_string(k) + "," +
                                                  std::to_string(r) + ")"},
                                     {"slots of this grade",
                                      std::to_string(hits)}});
                  }});
           }
         }
         return out;
       }},
      {"gradation",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto a = sample_homogeneous_element(box, rng);
           auto b = sample_homogeneous_element(box, rng);
           const std::int64_t da = degree(a.terms().begin()->first, box.rank);
           const std::int64_t db = degree(b.terms().begin()->first, box.rank);
           auto ab = central_bracket(a, b);
           for (const auto& [d, part] : homogeneous_components(ab)) {
             if (d != da + db)
               return describe({{"a", print_element(a)},
                                {"b", print_element(b)},
                                {"[a,b]", print_element(ab)},
                                {"stray degree", std::to_string(d)},
                                {"expected degree", std::to_string(da + db)}});
           }
           return std::nullopt;
         });
       }},
      {"grading-compatibility",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks)
           for (Family f : {Family::V, Family::Vbar})
             for (int m : c.m_values) {
               SampleBox box = box_for(c, n);
               ModuleParams params = ModuleParams::formal(f, n, m);
               out.push_back(
                   {module_stream(n, f, m), c.samples,
                    [box, params](SampleRng& rng, std::int64_t) -> Outcome {
                      auto x = sample_homogeneous_element(box, rng);
                      auto v = sample_homogeneous_vector(params, box, rng);
                      const Slot& s = v.entries().begin()->first;
                      const std::int64_t d =
                          degree(x.terms().begin()->first, box.rank);
                      const std::int64_t g =
                          grade_index(params.family, params.rank, s.k, s.r);
                      auto xv = act(x, v);
                      for (const auto& [slot, coeff] : xv.entries()) {
                        if (grade_index(params.family, params.rank, slot.k,
                                        slot.r) != g + d)
                          return describe({{"x", print_element(x)},
                                           {"v", print_vector(v)},
                                           {"x.v", print_vector(xv)},
                                           {"expected grade",
                                            std::to_string(g + d)}});
                      }
                      return std::nullopt;
                    }});
             }
         return out;
       }},
      {"module-axiom",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks)
           for (Family f : {Family::V, Family::Vbar})
             for (int m : c.m_values) {
               SampleBox box = box_for(c, n);
               ModuleParams params = ModuleParams::formal(f, n, m);
               out.push_back(
                   {module_stream(n, f, m), c.samples,
                    [box, params](SampleRng& rng, std::int64_t) -> Outcome {
                      auto x = sample_element(box, rng, true);
                      auto y = sample_element(box, rng, true);
                      auto v = sample_module_vector(params, box, rng);
                      auto lhs = act(central_bracket(x, y), v);
                      auto rhs = act(x, act(y, v)) - act(y, act(x, v));
                      if (lhs == rhs) return std::nullopt;
                      return describe({{"module", module_stream(params.rank,
                                                                params.family,
                                                                params.m)},
                                       {"x", print_element(x)},
                                       {"y", print_element(y)},
                                       {"v", print_vector(v)},
                                       {"[x,y].v", print_vector(lhs)},
                                       {"x.y.v - y.x.v", print_vector(rhs)}});
                    }});
             }
         return out;
       }},
      {"no-highest-lowest-weight",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks)
           for (Family f : {Family::V, Family::Vbar}) {
             SampleBox box = box_for(c, n);
             ModuleParams params = ModuleParams::formal(f, n, 1);
             GeneratorBounds bounds{c.i_bound, c.j_bound};
             out.push_back(
                 {module_stream(n, f, 1), c.samples,
                  [box, params, bounds](SampleRng& rng,
                                        std::int64_t) -> Outcome {
                    auto v = sample_homogeneous_vector(params, box, rng);
                    GeneratorBox gens = generator_box(params.rank, bounds);
                    auto moves = [&](const std::vector<AlgebraElement>& gs) {
                      return std::any_of(gs.begin(), gs.end(), [&](auto& g) {
                        return !act(g, v).is_zero();
                      });
                    };
                    const bool pos = moves(gens.positive);
                    const bool neg = moves(gens.negative);
                    const bool hw = is_highest_weight_vector(v, bounds);
                    const bool lw = is_lowest_weight_vector(v, bounds);
                    if (pos && neg && !hw && !lw) return std::nullopt;
                    return describe(
                        {{"v", print_vector(v)},
                         {"positive generator acts", pos ? "yes" : "no"},
                         {"negative generator acts", neg ? "yes" : "no"},
                         {"highest weight", hw ? "yes" : "no"},
                         {"lowest weight", lw ? "yes" : "no"}});
                  }});
           }
         return out;
       }},
      {"pairing-contravariance",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           ModuleParams bar = ModuleParams::formal(Family::Vbar, box.rank);
           ModuleParams plain{Family::V, box.rank, 1,
                              -Poly::indeterminate()};
           auto x = sample_element(box, rng);
           auto w = sample_module_vector(bar, box, rng);
           auto v = sample_module_vector(plain, box, rng);
           Poly left = pairing(act(x, w), v);
           Poly right = pairing(w, act(x, v));
           if ((left + right).is_zero()) return std::nullopt;
           return describe({{"x", print_element(x)},
                            {"w", print_vector(w)},
                            {"v", print_vector(v)},
                            {"<x.w,v>", left.str()},
                            {"<w,x.v>", right.str()}});
         });
       }},
      {"plain-jacobi",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) {
           return jacobi_case(box, rng, &plain_bracket, false);
         });
       }},
      {"sigma-automorphism",
       [](const SuiteConfig& c) {
         return per_rank(c, [](const SampleBox& box, SampleRng& rng) -> Outcome {
           auto a = sample_element(box, rng);
           auto b = sample_element(box, rng);
           auto id = embed_scalar(0, 0, box.rank);
           auto lhs = sigma(plain_bracket(a, b));
           auto rhs = plain_bracket(sigma(a), sigma(b));
           auto twice = sigma(sigma(a));
           auto sid = sigma(id);
           if (lhs == rhs && twice == a && sid == -id) return std::nullopt;
           return describe({{"a", print_element(a)},
                            {"b", print_element(b)},
                            {"sigma([a,b])", print_element(lhs)},
                            {"[sigma a, sigma b]", print_element(rhs)},
                            {"sigma(sigma(a))", print_element(twice)},
                            {"sigma(I)", print_element(sid)}});
         });
       }},
      {"twist-relation",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         for (int n : c.ranks)
           for (int m : c.m_values) {
             SampleBox box = box_for(c, n);
             ModuleParams plain = ModuleParams::formal(Family::V, n, m);
             ModuleParams bar = ModuleParams::formal(Family::Vbar, n, m);
             out.push_back(
                 {module_stream(n, Family::Vbar, m), c.samples,
                  [box, plain, bar](SampleRng& rng, std::int64_t) -> Outcome {
                    auto x = sample_element(box, rng);
                    auto v = sample_module_vector(plain, box, rng);
                    auto twisted = act(x, v.reinterpret(bar)).reinterpret(plain);
                    auto via_sigma = act(sigma(x), v);
                    if (twisted == via_sigma) return std::nullopt;
                    return describe({{"x", print_element(x)},
                                     {"v", print_vector(v)},
                                     {"Vbar action", print_vector(twisted)},
                                     {"V action of sigma(x)",
                                      print_vector(via_sigma)}});
                  }});
           }
         return out;
       }},
      {"virasoro-closed-form",
       [](const SuiteConfig& c) {
         std::vector<Batch> out;
         const std::int64_t ib = c.i_bound;
         const std::int64_t width = 2 * ib + 1;
         for (int n : c.ranks) {
           out.push_back(
               {rank_stream(n), width * width,
                [n, ib, width](SampleRng&, std::int64_t idx) -> Outcome {
                  const std::int64_t i = idx / width - ib;
                  const std::int64_t k = idx % width - ib;
                  // t^(i+1) d/dt = t^i D
                  auto x = embed_scalar(i, 1, n);
                  auto y = embed_scalar(k, 0, n);
                  AlgebraElement expected = Rational(k) * embed_scalar(i + k, 0, n);
                  if (i == -k)
                    expected.add_central(-gen_binomial(i + 1, 2) * Rational(n));
                  auto got = central_bracket(x, y);
                  auto direct = bracket_falling_direct(to_falling(x),
                                                       to_falling(y));
                  if (got == expected && direct == to_falling(expected))
                    return std::nullopt;
                  return describe({{"x", print_element(x)},
                                   {"y", print_element(y)},
                                   {"[x,y]", print_element(got)},
                                   {"falling route", print_falling(direct)},
                                   {"expected", print_element(expected)}});
                }});
         }
         return out;
       }},
    };
    std::sort(all.begin(), all.end(), [](const CheckSpec& x, const CheckSpec& y) {
      return std::string_view(x.name) < std::string_view(y.name);
    });
    return all;
  }();
  return specs;
}

CheckResult run_check(const CheckSpec& spec, const SuiteConfig& config,
                      bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Batch> batches = spec.build(config);
  std::vector<std::pair<std::size_t, std::int64_t>> flat;
  for (std::size_t b = 0; b < batches.size(); ++b)
    for (std::int64_t idx = 0; idx < batches[b].count; ++idx)
      flat.emplace_back(b, idx);

  std::vector<Outcome> outcomes(flat.size());
  auto run_one = [&](std::size_t n) {
    const auto& [b, idx] = flat[n];
    const Batch& batch = batches[b];
    SampleRng rng = stream_rng(config.seed,
                               std::string(spec.name) + "/" + batch.stream,
                               static_cast<std::uint64_t>(idx));
    try {
      outcomes[n] = batch.run(rng, idx);
    } catch (const std::exception& e) {
      outcomes[n] = std::string("exception: ") + e.what();
    }
    if (outcomes[n])
      *outcomes[n] = "[" + batch.stream + " #" + std::to_string(idx) + "] " +
                     *outcomes[n];
  };

  const auto total = static_cast<std::int64_t>(flat.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t n = 0; n < total; ++n)
      run_one(static_cast<std::size_t>(n));
  } else {
    for (std::int64_t n = 0; n < total; ++n)
      run_one(static_cast<std::size_t>(n));
  }

  CheckResult result;
  result.name = spec.name;
  result.samples = total;
  for (auto& o : outcomes) {
    if (o) {
      result.passed = false;
      result.counterexample = std::move(o);
      break;
    }
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

Report run(const SuiteConfig& config, bool parallel) {
  config.validate();
  Report report;
  for (const auto& spec : registry()) {
    if (config.checks &&
        std::find(config.checks->begin(), config.checks->end(), spec.name) ==
            config.checks->end())
      continue;
    report.checks.push_back(run_check(spec, config, parallel));
  }
  return report;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : registry()) out.emplace_back(spec.name);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

void SuiteConfig::validate() const {
  if (ranks.empty()) throw std::invalid_argument("no ranks given");
  for (int n : ranks)
    if (n < 1) throw std::invalid_argument("ranks must be positive");
  for (int m : m_values)
    if (m < 1) throw std::invalid_argument("Jordan sizes must be positive");
  if (i_bound < 0 || j_bound < 0)
    throw std::invalid_argument("bounds must be nonnegative");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (checks) {
    const auto& known = check_names();
    for (const auto& name : *checks)
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw std::invalid_argument("unknown check '" + name + "'");
  }
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report run_suite(const SuiteConfig& config) { return run(config, true); }

Report run_suite_serial(const SuiteConfig& config) {
  return run(config, false);
}

nlohmann::json to_json(const Report& report, const SuiteConfig& config,
                       bool include_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j = {{"name", c.name},
                        {"samples", c.samples},
                        {"passed", c.passed},
                        {"counterexample", nullptr}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (include_timing) j["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(j));
  }
  return {{"config",
           {{"ranks", config.ranks},
            {"i_bound", config.i_bound},
            {"j_bound", config.j_bound},
            {"m_values", config.m_values},
            {"samples", config.samples},
            {"seed", config.seed}}},
          {"all_passed", report.all_passed()},
          {"checks", checks}};
}

std::string to_text(const Report& report, bool include_timing) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.name + "  (" + std::to_string(c.samples) + " cases";
    if (include_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, ", %.1f ms", c.elapsed_ms);
      out += buf;
    }
    out += ")\n";
    if (c.counterexample) {
      ++failed;
      out += "      counterexample: " + *c.counterexample + "\n";
    }
  }
  out += std::to_string(report.checks.size() - failed) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace gldiff
