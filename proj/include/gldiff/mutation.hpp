#pragma once

// Test-only single-site kernel mutations. A mutant build compiles the
// library with -DGLDIFF_MUTANT=<name>; the default build is `none` and every
// `if constexpr (kMutant == ...)` branch folds away.

namespace gldiff::detail {

enum class Mutant {
  none,
  cocycle_sign,        // cocycle drops its (-1)^j factor
  cocycle_top,         // cocycle binomial top becomes i+j+1
  product_binomial,    // product keeps only the s = 0 term of (D+k)^j
  product_shift,       // product expands (D+i)^j instead of (D+k)^j
  twist_sign,          // twisted action drops its (-1)^(j+1) factor
  sigma_shift,         // sigma uses D^j instead of (D+i)^j
  degree_sign,         // degree uses kN+p+q
  grade_truncation,    // grade inverse uses truncating division
  weight_box,          // weight-vector generator box starts at k = 0
};

#ifndef GLDIFF_MUTANT
#define GLDIFF_MUTANT none
#endif

inline constexpr Mutant kMutant = Mutant::GLDIFF_MUTANT;

}  // namespace gldiff::detail
