#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "gldiff/element.hpp"
#include "gldiff/poly.hpp"

namespace gldiff {

/// V acts by (t^i D^j A) v_k = (k + alpha)^j A v_{i+k};
/// Vbar by (t^i D^j A) v_k = (-1)^(j+1) (i + k + alpha)^j A^T v_{i+k}.
enum class Family { V, Vbar };

const char* family_name(Family f);

/// Parameters of V(m, alpha) / Vbar(m, alpha). `lambda` is the eigenvalue of
/// the Jordan block alpha = lambda id + J on C^m, given as a polynomial of
/// degree <= 1 in the formal indeterminate: a rational constant for a
/// specialized module, `a` for the generic one, `-a` for V(-alpha).
struct ModuleParams {
  Family family = Family::V;
  int rank = 1;
  int m = 1;
  Poly lambda = Poly::indeterminate();

  static ModuleParams formal(Family family, int rank, int m = 1) {
    return {family, rank, m, Poly::indeterminate()};
  }

  void validate() const;
  friend bool operator==(const ModuleParams&, const ModuleParams&) = default;
};

/// Basis slot t^(k+alpha) (eps_r (x) e_s), 1-based r and s.
struct Slot {
  std::int64_t k = 0;
  int r = 1;
  int s = 1;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Finite-support vector of V(m,alpha) or Vbar(m,alpha) with polynomial
/// coefficients in the formal parameter.
class ModuleVector {
 public:
  using Entries = std::map<Slot, Poly>;

  explicit ModuleVector(ModuleParams params);
  static ModuleVector basis(const ModuleParams& params, const Slot& slot,
                            const Poly& coeff = Poly(1));

  const ModuleParams& params() const { return params_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  /// Coefficient at `slot`, zero if absent.
  Poly at(const Slot& slot) const;

  void add(const Slot& slot, const Poly& coeff);

  /// Same entries, read in another module of the same shape.
  ModuleVector reinterpret(const ModuleParams& params) const;

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  void require_compatible(const ModuleVector& o) const;

  ModuleParams params_;
  Entries entries_;
};

/// Substitutes a = value in lambda and in every coefficient.
ModuleVector specialize(const ModuleVector& v, const Rational& value);

/// Action of the centrally extended algebra; C acts by zero.
ModuleVector act(const AlgebraElement& x, const ModuleVector& v);

/// Z-grade of slot (k, r): kN + r - 1 for V, kN + N - r for Vbar.
std::int64_t grade_index(Family family, int rank, std::int64_t k, int r);
/// Inverse of grade_index.
std::pair<std::int64_t, int> slot_of_grade(Family family, int rank,
                                           std::int64_t grade);

/// Entries whose grade is congruent to `residue` mod N.
ModuleVector residue_slice(const ModuleVector& v, int residue);

/// <t^(i+alpha) eps_p, t^(j-alpha) eps_q> = delta_{i+j,0} delta_{p,q},
/// for w in Vbar(alpha) and v in V(-alpha), m = 1.
Poly pairing(const ModuleVector& w, const ModuleVector& v);

struct WeightRecord {
  Rational central;
  Poly d;
  std::vector<Rational> diagonal;  // E_{p,p} eigenvalue, index p-1

  friend bool operator==(const WeightRecord&, const WeightRecord&) = default;
};

/// Eigenvalues of C, D and E_{p,p} on the basis vector at (k, r), obtained
/// by acting with each Cartan generator. Requires m = 1.
WeightRecord weight_of(const ModuleParams& params, std::int64_t k, int r);

struct GeneratorBounds {
  std::int64_t i_bound = 2;
  std::int64_t j_bound = 2;
};

/// Generators t^k D^j E_{p,q} with |k| <= i_bound and j <= j_bound, split by
/// the sign of their degree.
struct GeneratorBox {
  std::vector<AlgebraElement> negative;
  std::vector<AlgebraElement> zero;
  std::vector<AlgebraElement> positive;
};
GeneratorBox generator_box(int rank, const GeneratorBounds& bounds);

using Action =
    std::function<ModuleVector(const AlgebraElement&, const ModuleVector&)>;

/// Bounded highest-weight test: every degree-0 generator in the box maps v
/// into the line through v and every positive-degree generator kills v.
/// This approximates the unbounded condition by a finite generating box.
bool is_highest_weight_vector(const ModuleVector& v,
                              const GeneratorBounds& bounds,
                              const Action& action = act);
/// As above with negative-degree generators.
bool is_lowest_weight_vector(const ModuleVector& v,
                             const GeneratorBounds& bounds,
                             const Action& action = act);

/// True when `image` is a (polynomial or rational-function) multiple of `v`.
bool is_proportional(const ModuleVector& image, const ModuleVector& v);

}  // namespace gldiff
