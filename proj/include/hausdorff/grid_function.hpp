#pragma once

#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

/// One axis of a tensor grid: node magnitudes (strictly increasing,
/// positive) plus quadrature weights in the x measure. Log-uniform axes
/// carry their (t0, dt) parameters for O(1) interpolation lookup and for
/// the Mellin transform.
struct GridAxis {
  std::vector<double> nodes;
  std::vector<double> weights;
  bool log_uniform = false;
  double t0 = 0.0;
  double dt = 0.0;

  /// nodes = exp(t0 + i*dt), i = 0..count-1, weights dt * x (Riemann sum
  /// in log coordinates; pairs exactly with the discrete Mellin chain).
  static GridAxis log_axis(double t0, double dt, int count);
  /// Uniform linear axis with trapezoid weights.
  static GridAxis linear_axis(double lo, double hi, int count);
  /// Arbitrary strictly increasing positive nodes, trapezoid weights.
  static GridAxis from_nodes(std::vector<double> nodes);

  size_t size() const { return nodes.size(); }
};

/// Complex samples of a function on a tensor grid inside one hyperoctant.
/// Row-major layout; coordinate i of node (m_0..m_{n-1}) on axis i is
/// sign_i * axes[i].nodes[m_i].
class GridFunction {
 public:
  GridFunction(Octant octant, std::vector<GridAxis> axes);

  int dim() const { return static_cast<int>(axes_.size()); }
  const Octant& octant() const { return octant_; }
  const std::vector<GridAxis>& axes() const { return axes_; }
  const GridAxis& axis(int i) const { return axes_[static_cast<size_t>(i)]; }

  size_t size() const { return values_.size(); }
  std::vector<cplx>& values() { return values_; }
  const std::vector<cplx>& values() const { return values_; }
  cplx& operator[](size_t i) { return values_[i]; }
  const cplx& operator[](size_t i) const { return values_[i]; }

  /// Signed coordinates of the flat node index.
  Point point_at(size_t flat) const;
  /// Integration weight of the flat node index.
  double weight_at(size_t flat) const;

  double norm_l2() const;
  double norm_lp(double p) const;
  /// l2 pairing integral f conj(g) over the grid; shapes must match.
  cplx inner(const GridFunction& g) const;

  /// Cubic (4-point Lagrange) tensor interpolation at a signed point x.
  /// Points in a different hyperoctant evaluate to exactly zero (the grid
  /// function is zero-extended off its octant). Points whose magnitudes
  /// leave the grid box are an escape: value zero, `escaped` set, and
  /// `clamped_mag` reports |f| at the box-clamped point, which callers
  /// use to estimate the discarded mass.
  cplx interpolate(const Point& x, bool* escaped = nullptr,
                   double* clamped_mag = nullptr) const;

 private:
  Octant octant_;
  std::vector<GridAxis> axes_;
  std::vector<cplx> values_;
};

}  // namespace hausdorff
