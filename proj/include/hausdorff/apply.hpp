#pragma once

#include "hausdorff/functions.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

struct ApplyOptions {
  /// What to do when evaluation points of a grid-backed f leave its box
  /// and the discarded contribution estimate exceeds `truncation_tol`:
  /// throw TruncationError, or record the estimate and continue.
  enum class Truncation { error, warn };
  Truncation truncation = Truncation::error;
  /// Relative L2 threshold for the domain-truncation estimate.
  double truncation_tol = 1e-8;
  /// 0 = take HAUSDORFF_THREADS from the environment (default 1).
  int threads = 0;
};

struct ApplyResult {
  GridFunction values;
  /// Relative L2 estimate of the contribution discarded by zero-extending
  /// f beyond its box (0 for closed-form fields).
  double truncation_estimate = 0.0;
  /// integral |Phi| dmu, for diagnostics.
  double kernel_mass = 0.0;
};

/// (Hf)(x) = integral Phi(u) f(A(u)x) dmu(u) sampled on the tensor grid.
/// Box measures integrate on the spec's backbone rule with panels split at
/// the images of f's break positions, so piecewise-smooth test functions
/// integrate at full Gauss accuracy.
ApplyResult apply(const OperatorSpec& spec, const ScalarField& f,
                  const Octant& octant, std::vector<GridAxis> axes,
                  const ApplyOptions& opts = {});

/// Single-point evaluation (Hf)(x).
cplx apply_at(const OperatorSpec& spec, const ScalarField& f, const Point& x);

/// The adjoint operator is again Hausdorff: kernel conj(Phi) |det A|^{-1},
/// family A^{-1}, same measure.
OperatorSpec adjoint_spec(const OperatorSpec& spec);

/// apply(adjoint_spec(spec), ...).
ApplyResult apply_adjoint(const OperatorSpec& spec, const ScalarField& f,
                          const Octant& octant, std::vector<GridAxis> axes,
                          const ApplyOptions& opts = {});

}  // namespace hausdorff
