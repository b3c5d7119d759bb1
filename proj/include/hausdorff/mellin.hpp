#pragma once

#include "hausdorff/grid_function.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

/// One axis of the discretized Mellin transform: N log-spaced samples,
/// t in [t_min, t_min + N dt), N a power of two. The induced frequency
/// grid is uniform with spacing 2 pi / (N dt), Nyquist-symmetric.
struct MellinAxis {
  double t_min = -30.0;
  double dt = 60.0 / 8192;
  int count = 8192;

  double t_max() const { return t_min + count * dt; }
  double ds() const { return 2.0 * kPi / (count * dt); }
};

/// Tensor discretization of the modified Mellin transform on one
/// hyperoctant, n <= 3.
class MellinGrid {
 public:
  MellinGrid(std::vector<MellinAxis> axes, Octant octant);

  /// t in [-30, 30], N = 8192 per axis. Wide enough that the shipped
  /// test functions and their operator images truncate below 1e-6; fine
  /// enough that jump-limited aliasing stays under the certificate
  /// tolerances.
  static MellinGrid standard(int n, double t_lo = -30.0, double t_hi = 30.0,
                             int count = 8192);

  /// Standard grid adapted to the spec: discrete operators with
  /// power-form eigenvalues get dt snapped to divide log(lambda), so the
  /// dilation lattice (where operator images of discontinuous functions
  /// jump) lands on grid nodes and is sampled at the Dirichlet value.
  static MellinGrid for_spec(const OperatorSpec& spec, double t_lo = -30.0,
                             double t_hi = 30.0, int count = 8192);

  int dim() const { return static_cast<int>(axes_.size()); }
  const Octant& octant() const { return octant_; }
  const std::vector<MellinAxis>& axes() const { return axes_; }
  const MellinAxis& axis(int i) const { return axes_[static_cast<size_t>(i)]; }

  std::vector<GridAxis> x_axes() const;
  std::vector<GridAxis> s_axes() const;

  /// 1-d grid along one axis (tensor pipelines).
  MellinGrid axis_grid(int i) const;

 private:
  std::vector<MellinAxis> axes_;
  Octant octant_;
};

struct MellinOptions {
  enum class Truncation { error, warn };
  Truncation truncation = Truncation::error;
  /// Boundary-shell mass threshold triggering the truncation error.
  double truncation_tol = 1e-6;
};

/// Modified Mellin transform on the grid's hyperoctant,
///   (Mf)(s) = (2 pi)^{-n/2} integral |x|^{-1/q + i s} f(x) dx,
/// computed as an FFT of e^{t/q'} f(e^t) under x = eps e^t (1/q' = 1-1/q).
/// q = 2 is the unitary case; other q are forward-only diagnostics.
/// f must be sampled on grid.x_axes().
GridFunction mellin_forward(const MellinGrid& grid, const GridFunction& f,
                            double q = 2.0, const MellinOptions& opts = {});

/// Inverse of the q = 2 chain; exact round trip on the grid up to
/// round-off. Rejects q != 2 (no inversion claim there) and mismatched
/// grids.
GridFunction mellin_inverse(const MellinGrid& grid, const GridFunction& g);

}  // namespace hausdorff
