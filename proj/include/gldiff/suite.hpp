#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gldiff/element.hpp"
#include "gldiff/module.hpp"

namespace gldiff {

/// Deterministic sample source. The engine is mt19937_64, whose output
/// sequence is fixed by the standard; bounded draws use rejection sampling
/// so results do not depend on the standard library's distributions.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Independent generator for sample `index` of the named stream.
SampleRng stream_rng(std::uint64_t seed, std::string_view stream,
                     std::uint64_t index);

/// Box |i| <= i_bound, 0 <= j <= j_bound, p, q in [1, rank].
struct SampleBox {
  int rank = 1;
  std::int64_t i_bound = 3;
  std::int64_t j_bound = 3;
};

Monomial sample_monomial(const SampleBox& box, SampleRng& rng);
/// 1-3 terms with coefficients n/d, n in [-3,3] \ {0}, d in [1,3].
/// With `with_central` the C coefficient is drawn the same way (or zero).
AlgebraElement sample_element(const SampleBox& box, SampleRng& rng,
                              bool with_central = false);
FallingElement sample_falling_element(const SampleBox& box, SampleRng& rng);
/// 1-3 terms of one common degree.
AlgebraElement sample_homogeneous_element(const SampleBox& box,
                                          SampleRng& rng);
/// 1-3 entries with |k| <= i_bound and coefficients of degree <= 1 in a.
ModuleVector sample_module_vector(const ModuleParams& params,
                                  const SampleBox& box, SampleRng& rng);
/// Single nonzero entry, hence homogeneous.
ModuleVector sample_homogeneous_vector(const ModuleParams& params,
                                       const SampleBox& box, SampleRng& rng);

struct SuiteConfig {
  std::vector<int> ranks{1, 2};
  std::int64_t i_bound = 3;
  std::int64_t j_bound = 3;
  std::vector<int> m_values{1, 2, 3};
  /// Random samples per (check, rank[, family, m]) stream.
  std::int64_t samples = 200;
  std::uint64_t seed = 7;
  /// Checks to run; nullopt runs all of them.
  std::optional<std::vector<std::string>> checks;

  /// Throws std::invalid_argument on empty ranks, bad bounds or unknown
  /// check names.
  void validate() const;
};

struct CheckResult {
  std::string name;
  std::int64_t samples = 0;
  bool passed = true;
  /// First failing case in index order, printed in expression syntax.
  std::optional<std::string> counterexample;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;  // sorted by name

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Every check name, sorted.
const std::vector<std::string>& check_names();

/// Runs the selected checks with samples distributed over OpenMP threads.
Report run_suite(const SuiteConfig& config);
/// Single-threaded reference; produces the same Report modulo timing.
Report run_suite_serial(const SuiteConfig& config);

/// Timing is left out unless requested so equal configs give equal bytes.
nlohmann::json to_json(const Report& report, const SuiteConfig& config,
                       bool include_timing = false);
std::string to_text(const Report& report, bool include_timing = false);

}  // namespace gldiff
