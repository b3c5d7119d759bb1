#pragma once

#include <string>
#include <vector>

#include "hausdorff/family.hpp"
#include "hausdorff/kernel.hpp"
#include "hausdorff/measure.hpp"

namespace hausdorff {

/// Full description of one generalized Hausdorff operator
///   (Hf)(x) = integral_Omega Phi(u) f(A(u) x) dmu(u)
/// acting on L^p(R^n). Immutable after construction; the constructor
/// rejects malformed shapes, validate_spec checks the analytic conditions.
class OperatorSpec {
 public:
  OperatorSpec(MeasureSpace measure, KernelSpec kernel, CommutingFamily family,
               double p, int dimension);

  const MeasureSpace& measure() const { return measure_; }
  const KernelSpec& kernel() const { return kernel_; }
  const CommutingFamily& family() const { return family_; }
  double p() const { return p_; }
  int dim() const { return n_; }

  /// True when the operator factors into independent per-axis actions:
  /// identity basis, a_j(u) = u_j over a box, constant kernel. Tensor
  /// test functions then split the whole pipeline axis by axis.
  bool separable() const;
  /// The 1-d factor acting on axis j (kernel scale carried on axis 0).
  OperatorSpec axis_factor(int j) const;

 private:
  MeasureSpace measure_;
  KernelSpec kernel_;
  CommutingFamily family_;
  double p_;
  int n_;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  /// integral |Phi| (det A)^{-1/p} dmu over the discretized Omega.
  double l1_bound = 0.0;
  /// Ratio-test estimate of the truncated series tail (discrete measures
  /// with decaying weighted terms); 0 when unavailable.
  double tail_estimate = 0.0;
  std::vector<ValidationIssue> issues;
};

/// Checks every spec invariant: weight positivity, box nondegeneracy,
/// kernel integrability and the nonnegativity claim, family positivity
/// and orthogonality of the basis, and the L^1 boundedness condition
/// integral |Phi| (det A)^{-1/p} dmu < cap. Reports violations instead of
/// throwing; throws only if shapes are malformed (constructor contract).
ValidationReport validate_spec(const OperatorSpec& spec, double l1_cap = 1e12);

}  // namespace hausdorff
