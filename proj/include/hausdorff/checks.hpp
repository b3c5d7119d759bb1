#pragma once

#include <span>

#include "hausdorff/apply.hpp"

namespace hausdorff {

/// integral |Phi(u)| |det A(u)|^{-1/p} dmu(u): the boundedness estimate for
/// the operator norm on L^p. Every Rayleigh quotient stays below it.
double norm_bound_lp(const OperatorSpec& spec);

/// ||Hf||_p / ||f||_p on the given grid.
double rayleigh_quotient(const OperatorSpec& spec, const ScalarField& f,
                         const Octant& octant, const std::vector<GridAxis>& axes);

/// ||H H* f - H* H f||_2 / ||f||_2 on the grid (p = 2 only). Commuting
/// families are normal, so the residual is pure discretization error.
/// Separable specs with tensor f run axis by axis and combine exactly.
double normality_residual(const OperatorSpec& spec, const ScalarField& f,
                          const Octant& octant, const std::vector<GridAxis>& axes);

struct DualityCheck {
  cplx lhs;          // <Hf, g>
  cplx rhs;          // <f, H*g>
  double violation;  // |lhs - rhs| / (||f|| ||g||)
};

/// Verifies the adjoint pairing on the grid.
DualityCheck adjoint_duality(const OperatorSpec& spec, const ScalarField& f,
                             const ScalarField& g, const Octant& octant,
                             const std::vector<GridAxis>& axes);

struct RegularityProbe {
  double radius;
  cplx value;        // Hf at radius * (1..1)
  double deviation;  // |Hf - l|
};

struct RegularityReport {
  cplx kernel_integral;  // integral Phi dmu
  std::vector<RegularityProbe> probes;
};

/// Probes Hf along the diagonal at increasing radii for f -> l at
/// infinity; Hf tends to l * integral(Phi dmu), which equals l exactly
/// when the kernel integral is 1.
RegularityReport regularity_check(const OperatorSpec& spec, const ScalarField& f,
                                  std::span<const double> probe_radii, cplx limit);

/// || (x) a_1 - (x) b_1 ... ||_2 for tensor products given their 1-d
/// factors, evaluated through the telescoped Gram expansion (no dense
/// tensor is materialized, no large-term cancellation).
double tensor_diff_l2(std::span<const GridFunction> a, std::span<const GridFunction> b);
/// prod_j ||a_j||_2.
double tensor_l2(std::span<const GridFunction> a);

/// 1-d slice of a tensor field.
ScalarField axis_field(const ScalarField& f, int j);

}  // namespace hausdorff
