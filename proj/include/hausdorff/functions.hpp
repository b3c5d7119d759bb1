#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hausdorff/grid_function.hpp"
#include "hausdorff/types.hpp"

namespace hausdorff {

/// Escape bookkeeping for grid-backed fields: set when an evaluation point
/// left the representable box, with |f| at the box-clamped point as the
/// local magnitude of what zero-extension discarded.
struct EvalTrace {
  bool escaped = false;
  double clamped_mag = 0.0;
};

/// An evaluable function on R^n. Closed-form test functions carry the
/// metadata the quadrature needs: per-axis break positions (the rule is
/// split there, so indicators integrate to machine precision) and tensor
/// factorization (the per-axis pipelines of separable operators need it).
///
/// Convention: at a jump the evaluator returns the mean of the one-sided
/// limits (Dirichlet value). Sampled transforms of discontinuous
/// functions lose an O(dt) flat error term without this.
struct ScalarField {
  std::string name;
  int dim = 1;
  std::function<cplx(const Point&, EvalTrace*)> eval_traced;
  bool smooth = true;
  bool tensor = false;
  std::vector<std::function<cplx(double)>> factors;   // per axis, signed arg
  std::vector<std::vector<double>> axis_breaks;        // per axis, magnitudes

  cplx operator()(const Point& x) const { return eval_traced(x, nullptr); }

  /// Tensor product of 1-d factors (helper for building new fields).
  static ScalarField tensor_product(std::string name,
                                    std::vector<std::function<cplx(double)>> factors,
                                    std::vector<std::vector<double>> breaks,
                                    bool smooth);
};

/// Shipped test functions (all tensorized over the positive hyperoctant,
/// zero elsewhere).
namespace fields {

/// indicator of (0,1)^n, value 1/2 on the jump faces
ScalarField indicator01(int n);
/// exp(-(log x - center)^2 / (2 sigma^2)) per axis; compactly
/// log-supported for practical purposes
ScalarField gauss_bump(int n, double center = 0.0, double sigma = 1.0);
/// x^a exp(-x) per axis
ScalarField x_exp(int n, double a = 1.0);
/// x^a on (0,1), 0 beyond; a > -1/2 keeps it in L^2
ScalarField pow_indicator(int n, double a);
/// exp(-x) per axis
ScalarField exp_decay(int n);
/// x/(1+x) per axis; tends to 1 at infinity (regularity probe)
ScalarField rational_one(int n);

/// Lookup by CLI name: indicator01, gauss, xexp, powind045, expdecay, ratl.
ScalarField by_name(const std::string& name, int n);
/// Names in the shipped set, in a fixed order.
std::vector<std::string> shipped_names();

}  // namespace fields

/// Wrap a grid function as a field (cubic interpolation, escape tracking).
/// The GridFunction must outlive the field.
ScalarField field_from_grid(const GridFunction& g);

/// Sample a field on a tensor grid.
GridFunction sample(const ScalarField& f, const Octant& octant,
                    std::vector<GridAxis> axes);

}  // namespace hausdorff
