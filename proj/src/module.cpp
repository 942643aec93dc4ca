#include "gldiff/module.hpp"

#include <string>

#include "gldiff/algebra.hpp"
#include "gldiff/combinatorics.hpp"
#include "gldiff/errors.hpp"
#include "gldiff/mutation.hpp"

namespace gldiff {

using detail::kMutant;
using detail::Mutant;

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

const char* family_name(Family f) { return f == Family::V ? "V" : "Vbar"; }

void ModuleParams::validate() const {
  if (rank < 1) throw DimensionError("rank must be positive");
  if (m < 1) throw DimensionError("Jordan size m must be positive");
  if (lambda.degree() > 1)
    throw DomainError("lambda must have degree at most 1 in a");
}

ModuleVector::ModuleVector(ModuleParams params) : params_(std::move(params)) {
  params_.validate();
}

ModuleVector ModuleVector::basis(const ModuleParams& params, const Slot& slot,
                                 const Poly& coeff) {
  ModuleVector v(params);
  v.add(slot, coeff);
  return v;
}

Poly ModuleVector::at(const Slot& slot) const {
  auto it = entries_.find(slot);
  return it == entries_.end() ? Poly() : it->second;
}

void ModuleVector::add(const Slot& slot, const Poly& coeff) {
  if (slot.r < 1 || slot.r > params_.rank)
    throw DimensionError("slot r=" + std::to_string(slot.r) +
                         " outside [1," + std::to_string(params_.rank) + "]");
  if (slot.s < 1 || slot.s > params_.m)
    throw DimensionError("slot s=" + std::to_string(slot.s) +
                         " outside [1," + std::to_string(params_.m) + "]");
  if (coeff.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(slot, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ModuleVector ModuleVector::reinterpret(const ModuleParams& params) const {
  if (params.rank != params_.rank || params.m != params_.m)
    throw DimensionError("reinterpret needs matching rank and m");
  ModuleVector r(params);
  r.entries_ = entries_;
  return r;
}

void ModuleVector::require_compatible(const ModuleVector& o) const {
  if (!(o.params_ == params_))
    throw DimensionError("module vectors belong to different modules");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.entries_) add(s, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.entries_) add(s, -c);
  return *this;
}

ModuleVector specialize(const ModuleVector& v, const Rational& value) {
  ModuleParams params = v.params();
  params.lambda = Poly(params.lambda.evaluate(value));
  ModuleVector out(params);
  for (const auto& [slot, c] : v.entries()) out.add(slot, Poly(c.evaluate(value)));
  return out;
}

ModuleVector act(const AlgebraElement& x, const ModuleVector& v) {
  const ModuleParams& params = v.params();
  if (x.rank() != params.rank)
    throw DimensionError("rank mismatch: element " + std::to_string(x.rank()) +
                         ", module " + std::to_string(params.rank));
  const bool twisted = params.family == Family::Vbar;
  std::map<std::pair<std::int64_t, std::int64_t>, SquareMatrixPoly> powers;
  auto power = [&](std::int64_t shift, std::int64_t j) -> const SquareMatrixPoly& {
    auto key = std::make_pair(shift, j);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers
               .emplace(key, jordan_shifted_power(params.lambda + Poly(shift),
                                                  params.m,
                                                  static_cast<unsigned>(j)))
               .first;
    return it->second;
  };

  ModuleVector out(params);
  for (const auto& [g, c] : x.terms()) {
    for (const auto& [slot, e] : v.entries()) {
      // A eps_r for V, A^T eps_r for Vbar.
      const int source = twisted ? g.p : g.q;
      const int target = twisted ? g.q : g.p;
      if (source != slot.r) continue;
      const std::int64_t shift = twisted ? g.i + slot.k : slot.k;
      Rational scale = c;
      if (twisted && kMutant != Mutant::twist_sign && g.j % 2 == 0)
        scale = -scale;
      const SquareMatrixPoly& jordan = power(shift, g.j);
      for (int row = 1; row <= slot.s; ++row) {
        const Poly& entry = jordan.at(row - 1, slot.s - 1);
        if (entry.is_zero()) continue;
        out.add({g.i + slot.k, target, row}, Poly(scale) * entry * e);
      }
    }
  }
  return out;
}

std::int64_t grade_index(Family family, int rank, std::int64_t k, int r) {
  if (rank < 1) throw DimensionError("rank must be positive");
  if (r < 1 || r > rank)
    throw DimensionError("r=" + std::to_string(r) + " outside [1," +
                         std::to_string(rank) + "]");
  return family == Family::V ? k * rank + r - 1 : k * rank + rank - r;
}

std::pair<std::int64_t, int> slot_of_grade(Family family, int rank,
                                           std::int64_t grade) {
  if (rank < 1) throw DimensionError("rank must be positive");
  const std::int64_t k = kMutant == Mutant::grade_truncation
                             ? grade / rank
                             : floor_div(grade, rank);
  const std::int64_t rem = grade - k * rank;
  const int r = family == Family::V ? static_cast<int>(rem) + 1
                                    : rank - static_cast<int>(rem);
  return {k, r};
}

ModuleVector residue_slice(const ModuleVector& v, int residue) {
  const int n = v.params().rank;
  if (residue < 0 || residue >= n)
    throw DomainError("residue " + std::to_string(residue) + " outside [0," +
                      std::to_string(n - 1) + "]");
  ModuleVector out(v.params());
  for (const auto& [slot, c] : v.entries()) {
    std::int64_t g = grade_index(v.params().family, n, slot.k, slot.r);
    if (g - floor_div(g, n) * n == residue) out.add(slot, c);
  }
  return out;
}

Poly pairing(const ModuleVector& w, const ModuleVector& v) {
  const ModuleParams& pw = w.params();
  const ModuleParams& pv = v.params();
  if (pw.rank != pv.rank) throw DimensionError("pairing rank mismatch");
  if (pw.family != Family::Vbar || pv.family != Family::V)
    throw DomainError("pairing takes Vbar(alpha) on the left, V(-alpha) right");
  if (pw.m != 1 || pv.m != 1) throw DomainError("pairing requires m = 1");
  if (!(pv.lambda == -pw.lambda))
    throw DomainError("pairing requires parameters alpha and -alpha");
  Poly total;
  for (const auto& [slot, c] : w.entries()) {
    Poly other = v.at({-slot.k, slot.r, 1});
    if (!other.is_zero()) total += c * other;
  }
  return total;
}

namespace {

Poly eigenvalue_on(const AlgebraElement& g, const ModuleVector& basis,
                   const Slot& slot) {
  ModuleVector image = act(g, basis);
  for (const auto& [s, c] : image.entries())
    if (!(s == slot)) throw DomainError("basis vector is not an eigenvector");
  return image.at(slot);
}

}  // namespace

WeightRecord weight_of(const ModuleParams& params, std::int64_t k, int r) {
  params.validate();
  if (params.m != 1) throw DomainError("not a weight vector basis (m > 1)");
  const int n = params.rank;
  const Slot slot{k, r, 1};
  const ModuleVector e = ModuleVector::basis(params, slot);
  WeightRecord w;
  w.central = eigenvalue_on(AlgebraElement::central_unit(n), e, slot)
                  .constant_value();
  w.d = eigenvalue_on(embed_scalar(0, 1, n), e, slot);
  for (int p = 1; p <= n; ++p)
    w.diagonal.push_back(
        eigenvalue_on(AlgebraElement::monomial(n, {0, 0, p, p}), e, slot)
            .constant_value());
  return w;
}

GeneratorBox generator_box(int rank, const GeneratorBounds& bounds) {
  GeneratorBox box;
  const std::int64_t k_lo = kMutant == Mutant::weight_box ? 0 : -bounds.i_bound;
  for (std::int64_t k = k_lo; k <= bounds.i_bound; ++k)
    for (std::int64_t j = 0; j <= bounds.j_bound; ++j)
      for (int p = 1; p <= rank; ++p)
        for (int q = 1; q <= rank; ++q) {
          Monomial m{k, j, p, q};
          auto g = AlgebraElement::monomial(rank, m);
          std::int64_t d = degree(m, rank);
          (d < 0 ? box.negative : d > 0 ? box.positive : box.zero)
              .push_back(std::move(g));
        }
  return box;
}

bool is_proportional(const ModuleVector& image, const ModuleVector& v) {
  if (image.is_zero()) return true;
  if (v.is_zero()) return false;
  const auto& [ref_slot, ref] = *v.entries().begin();
  const Poly image_ref = image.at(ref_slot);
  for (const auto& [slot, c] : image.entries())
    if (v.at(slot).is_zero()) return false;
  for (const auto& [slot, c] : v.entries())
    if (!(image.at(slot) * ref == image_ref * c)) return false;
  return true;
}

namespace {

bool extremal_weight_test(const ModuleVector& v, const GeneratorBounds& bounds,
                          const Action& action, bool highest) {
  if (v.is_zero()) throw DomainError("weight-vector test of the zero vector");
  GeneratorBox box = generator_box(v.params().rank, bounds);
  for (const auto& g : box.zero)
    if (!is_proportional(action(g, v), v)) return false;
  for (const auto& g : highest ? box.positive : box.negative)
    if (!action(g, v).is_zero()) return false;
  return true;
}

}  // namespace

bool is_highest_weight_vector(const ModuleVector& v,
                              const GeneratorBounds& bounds,
                              const Action& action) {
  return extremal_weight_test(v, bounds, action, true);
}

bool is_lowest_weight_vector(const ModuleVector& v,
                             const GeneratorBounds& bounds,
                             const Action& action) {
  return extremal_weight_test(v, bounds, action, false);
}

}  // namespace gldiff
