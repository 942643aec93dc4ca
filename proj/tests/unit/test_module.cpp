#include <doctest.h>

#include "gldiff/algebra.hpp"
#include "gldiff/expression.hpp"
#include "gldiff/module.hpp"
#include "gldiff/suite.hpp"

using namespace gldiff;

namespace {

const Poly a = Poly::indeterminate();

AlgebraElement el(const char* text, int n) { return parse_element(text, n); }

}  // namespace

TEST_CASE("action examples") {
  auto params = ModuleParams::formal(Family::V, 2);
  auto v = ModuleVector::basis(params, {3, 2, 1});
  CHECK(act(el("t^2 D E[1,2]", 2), v) ==
        ModuleVector::basis(params, {5, 1, 1}, a + Poly(3)));

  for (std::uint64_t idx = 0; idx < 40; ++idx) {
    SampleRng rng = stream_rng(5, "identity-action", idx);
    int n = static_cast<int>(idx % 3) + 1;
    int m = static_cast<int>(idx / 3 % 3) + 1;
    SampleBox box{n, 3, 3};
    auto w = sample_module_vector(ModuleParams::formal(Family::V, n, m), box, rng);
    auto id = embed_scalar(0, 0, n);
    CHECK(act(id, w) == w);
    auto wb = w.reinterpret(ModuleParams::formal(Family::Vbar, n, m));
    ModuleVector neg(wb.params());
    neg -= wb;
    CHECK(act(id, wb) == neg);
    CHECK(act(el("C", n), w).is_zero());
  }

  auto bar = ModuleParams::formal(Family::Vbar, 1);
  for (std::int64_t k = -3; k <= 3; ++k) {
    auto vk = ModuleVector::basis(bar, {k, 1, 1});
    CHECK(act(el("D", 1), vk) == ModuleVector::basis(bar, {k, 1, 1}, a + Poly(k)));
  }
  CHECK_THROWS_AS(act(el("t", 1), ModuleVector(params)), DimensionError);
}

TEST_CASE("twisted action transposes and shifts") {
  // (t^i D^j A) v_k = (-1)^(j+1) (i+k+a)^j A^T v_(i+k)
  auto bar = ModuleParams::formal(Family::Vbar, 2);
  auto v = ModuleVector::basis(bar, {1, 1, 1});
  CHECK(act(el("t^2 D^2 E[1,2]", 2), v) ==
        ModuleVector::basis(bar, {3, 2, 1}, -(a + Poly(3)).pow(2)));
  CHECK(act(el("t^2 D^2 E[2,1]", 2), v).is_zero());
}

TEST_CASE("Jordan slot sees lambda id + J") {
  auto params = ModuleParams::formal(Family::V, 1, 3);
  auto top = ModuleVector::basis(params, {0, 1, 3});
  ModuleVector expected(params);
  expected.add({0, 1, 3}, a);
  expected.add({0, 1, 2}, Poly(1));
  CHECK(act(el("D", 1), top) == expected);
  // (a + J)^2 e_3 = a^2 e_3 + 2a e_2 + e_1
  ModuleVector sq(params);
  sq.add({0, 1, 3}, a * a);
  sq.add({0, 1, 2}, Poly(2) * a);
  sq.add({0, 1, 1}, Poly(1));
  CHECK(act(el("D^2", 1), top) == sq);
  CHECK(act(el("D", 1), ModuleVector::basis(params, {0, 1, 1})) ==
        ModuleVector::basis(params, {0, 1, 1}, a));
}

TEST_CASE("specialization commutes with the action") {
  for (std::uint64_t idx = 0; idx < 60; ++idx) {
    SampleRng rng = stream_rng(9, "specialize", idx);
    int n = static_cast<int>(idx % 2) + 1;
    Family f = idx % 4 < 2 ? Family::V : Family::Vbar;
    int m = static_cast<int>(idx % 3) + 1;
    SampleBox box{n, 3, 3};
    auto v = sample_module_vector(ModuleParams::formal(f, n, m), box, rng);
    auto x = sample_element(box, rng);
    Rational value(static_cast<std::int64_t>(idx % 7) - 3, 2);
    CHECK(specialize(act(x, v), value) == act(x, specialize(v, value)));
  }
}

TEST_CASE("grade index") {
  CHECK(grade_index(Family::V, 2, 0, 1) == 0);
  CHECK(grade_index(Family::V, 2, 0, 2) == 1);
  CHECK(grade_index(Family::V, 2, 1, 1) == 2);
  CHECK(grade_index(Family::Vbar, 2, 0, 2) == 0);
  CHECK(grade_index(Family::Vbar, 2, 0, 1) == 1);
  for (std::int64_t k = -5; k <= 5; ++k)
    CHECK(grade_index(Family::V, 1, k, 1) == k);
  CHECK_THROWS_AS(grade_index(Family::V, 2, 0, 3), DimensionError);
  CHECK_THROWS_AS(grade_index(Family::V, 2, 0, 0), DimensionError);

  for (Family f : {Family::V, Family::Vbar})
    for (int n = 1; n <= 4; ++n) {
      for (std::int64_t g = -100; g <= 100; ++g) {
        auto [k, r] = slot_of_grade(f, n, g);
        CHECK(grade_index(f, n, k, r) == g);
      }
      // exactly one slot per grade: dim V_j = 1
      std::map<std::int64_t, int> hits;
      for (std::int64_t k = -30; k <= 30; ++k)
        for (int r = 1; r <= n; ++r) ++hits[grade_index(f, n, k, r)];
      for (std::int64_t g = -25; g <= 25; ++g) CHECK(hits[g] == 1);
    }
}

TEST_CASE("residue slices partition a vector") {
  auto params = ModuleParams::formal(Family::V, 3, 2);
  ModuleVector v(params);
  v.add({0, 1, 1}, Poly(1));
  v.add({-1, 3, 2}, a);
  v.add({2, 2, 1}, Poly(5));
  v.add({-4, 1, 2}, a + Poly(1));
  CHECK(residue_slice(ModuleVector::basis(params, {2, 2, 1}), 1) ==
        ModuleVector::basis(params, {2, 2, 1}));
  CHECK(residue_slice(ModuleVector::basis(params, {2, 2, 1}), 0).is_zero());
  ModuleVector sum(params);
  for (int m0 = 0; m0 < 3; ++m0) sum += residue_slice(v, m0);
  CHECK(sum == v);
  CHECK(residue_slice(v, 0).entries().size() == 2);
  CHECK_THROWS_AS(residue_slice(v, 3), DomainError);
  CHECK_THROWS_AS(residue_slice(v, -1), DomainError);

  auto bar = ModuleParams::formal(Family::Vbar, 2);
  // grade of (k, r) is 2k + 2 - r
  CHECK(residue_slice(ModuleVector::basis(bar, {-1, 1, 1}), 1) ==
        ModuleVector::basis(bar, {-1, 1, 1}));
}

TEST_CASE("pairing") {
  ModuleParams bar = ModuleParams::formal(Family::Vbar, 1);
  ModuleParams neg{Family::V, 1, 1, -a};
  auto w = ModuleVector::basis(bar, {2, 1, 1});
  CHECK(pairing(w, ModuleVector::basis(neg, {-2, 1, 1})) == Poly(1));
  CHECK(pairing(w, ModuleVector::basis(neg, {-1, 1, 1})) == Poly(0));

  for (std::uint64_t idx = 0; idx < 100; ++idx) {
    SampleRng rng = stream_rng(17, "pairing", idx);
    int n = static_cast<int>(idx % 3) + 1;
    SampleBox box{n, 3, 3};
    ModuleParams pb = ModuleParams::formal(Family::Vbar, n);
    ModuleParams pv{Family::V, n, 1, -a};
    auto x = sample_element(box, rng, true);
    auto ww = sample_module_vector(pb, box, rng);
    auto vv = sample_module_vector(pv, box, rng);
    CHECK(pairing(act(x, ww), vv) == -pairing(ww, act(x, vv)));
  }

  CHECK_THROWS_AS(pairing(w, ModuleVector::basis(ModuleParams::formal(Family::V, 1),
                                                 {-2, 1, 1})),
                  DomainError);
  CHECK_THROWS_AS(pairing(ModuleVector::basis(neg, {0, 1, 1}),
                          ModuleVector::basis(neg, {0, 1, 1})),
                  DomainError);
  ModuleParams neg2{Family::V, 2, 1, -a};
  CHECK_THROWS_AS(pairing(w, ModuleVector::basis(neg2, {0, 1, 1})),
                  DimensionError);
  ModuleParams bar_m2 = ModuleParams::formal(Family::Vbar, 1, 2);
  ModuleParams neg_m2{Family::V, 1, 2, -a};
  CHECK_THROWS_AS(pairing(ModuleVector::basis(bar_m2, {0, 1, 1}),
                          ModuleVector::basis(neg_m2, {0, 1, 1})),
                  DomainError);
}

TEST_CASE("weights") {
  auto params = ModuleParams::formal(Family::V, 3);
  WeightRecord w = weight_of(params, 3, 2);
  CHECK(w.central == Rational(0));
  CHECK(w.d == a + Poly(3));
  CHECK(w.diagonal == std::vector<Rational>{0, 1, 0});

  WeightRecord wb = weight_of(ModuleParams::formal(Family::Vbar, 3), -2, 1);
  CHECK(wb.central == Rational(0));
  CHECK(wb.d == a - Poly(2));
  CHECK(wb.diagonal == std::vector<Rational>{-1, 0, 0});

  ModuleParams special{Family::V, 1, 1, Poly(Rational(1, 2))};
  CHECK(weight_of(special, 4, 1).d == Poly(Rational(9, 2)));

  CHECK_THROWS_AS(weight_of(ModuleParams::formal(Family::V, 2, 2), 0, 1),
                  DomainError);
}

TEST_CASE("highest and lowest weight vectors") {
  GeneratorBounds bounds{2, 2};
  auto params = ModuleParams::formal(Family::V, 1);
  auto v = ModuleVector::basis(params, {0, 1, 1});
  CHECK(!is_highest_weight_vector(v, bounds));
  CHECK(!is_lowest_weight_vector(v, bounds));
  CHECK(!act(embed_scalar(1, 0, 1), v).is_zero());
  CHECK(!act(embed_scalar(-1, 0, 1), v).is_zero());

  Action trivial = [](const AlgebraElement&, const ModuleVector& w) {
    return ModuleVector(w.params());
  };
  for (int n = 1; n <= 3; ++n) {
    auto u = ModuleVector::basis(ModuleParams::formal(Family::V, n), {1, 1, 1});
    CHECK(is_highest_weight_vector(u, bounds, trivial));
    CHECK(is_lowest_weight_vector(u, bounds, trivial));
  }

  CHECK_THROWS_AS(is_highest_weight_vector(ModuleVector(params), bounds),
                  DomainError);

  // Generic homogeneous vectors of V(alpha) and Vbar(alpha) are neither.
  for (std::uint64_t idx = 0; idx < 30; ++idx) {
    SampleRng rng = stream_rng(23, "weight-vectors", idx);
    int n = static_cast<int>(idx % 3) + 1;
    Family f = idx % 2 == 0 ? Family::V : Family::Vbar;
    auto u = sample_homogeneous_vector(ModuleParams::formal(f, n), {n, 2, 2}, rng);
    CHECK(!is_highest_weight_vector(u, bounds));
    CHECK(!is_lowest_weight_vector(u, bounds));
  }
}

TEST_CASE("degree-zero generators scale homogeneous vectors") {
  auto params = ModuleParams::formal(Family::V, 2);
  auto v = ModuleVector::basis(params, {1, 2, 1}, a - Poly(1));
  for (const auto& g : generator_box(2, {2, 3}).zero)
    CHECK(is_proportional(act(g, v), v));
  CHECK(!is_proportional(ModuleVector::basis(params, {2, 2, 1}), v));
}

TEST_CASE("generator box sorts by degree") {
  auto box = generator_box(2, {1, 0});
  // k in [-1,1], p,q in [1,2]: degrees 2k + p - q
  CHECK(box.zero.size() == 2);
  CHECK(box.positive.size() == 5);
  CHECK(box.negative.size() == 5);
}
