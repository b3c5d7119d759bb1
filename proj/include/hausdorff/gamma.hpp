#pragma once

#include "hausdorff/types.hpp"

namespace hausdorff {

/// Gamma function on the complex plane, Lanczos approximation (g = 7,
/// 9-term coefficient set, see src/gamma.cpp) with the reflection formula
/// for Re z < 1/2. Relative error below 1e-12 on the strip
/// Re z in [-10, 50], |Im z| <= 50, which covers every symbol this
/// library evaluates.
///
/// Throws SpecError at the poles (nonpositive integers).
cplx complex_gamma(cplx z);

/// log |Gamma(z)| helper used by tail estimates; same domain contract.
double log_abs_gamma(cplx z);

}  // namespace hausdorff
