#pragma once

#include <span>
#include <vector>

namespace hausdorff {

/// Nodes and weights of a 1-d quadrature rule on some interval.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration
/// on the Legendre polynomial and cached per order. Thread-safe.
const Rule1D& gauss_legendre(int order);

/// Composite Gauss rule: `order`-point Gauss panel between each pair of
/// consecutive breakpoints.
Rule1D composite_gauss(std::span<const double> breakpoints, int order);

/// Describes how one axis of a box measure is discretized. The backbone is
/// a set of panel breakpoints: a uniform base, optionally refined
/// geometrically toward an endpoint (ratio `geo_ratio` down to a relative
/// scale `geo_floor`). Geometric refinement resolves endpoint power
/// singularities u^a, a > -1, and log-scale oscillation u^{-is} with
/// uniform per-panel accuracy.
struct AxisQuadrature {
  double lo = 0.0;
  double hi = 1.0;
  int gauss_order = 16;
  int base_panels = 8;
  bool grade_lo = false;
  bool grade_hi = false;
  double geo_ratio = 0.35;
  double geo_floor = 1e-22;

  /// Backbone breakpoints, sorted, first = lo, last = hi.
  std::vector<double> breakpoints() const;

  /// Backbone plus extra split points (values outside (lo, hi) ignored).
  std::vector<double> breakpoints_with(std::span<const double> splits) const;

  Rule1D rule() const { return composite_gauss(breakpoints(), gauss_order); }
};

/// Subdivide panels until log-variation per panel is at most `max_log_step`:
/// every panel [a,b] with a > 0 satisfies log(b/a) <= max_log_step, used to
/// keep a bounded number of oscillation periods of u^{-is} per panel.
/// Panels touching zero are left to the geometric grading.
std::vector<double> refine_log_variation(std::span<const double> breakpoints,
                                         double max_log_step);

}  // namespace hausdorff
