#include "hausdorff/mellin.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "hausdorff/errors.hpp"

namespace hausdorff {
namespace {

std::mutex g_fftw_mutex;  // FFTW plan creation is not thread-safe

// In-place n-d complex DFT, sign = +1 (e^{+2 pi i mk/N}) or -1.
void fft_nd(std::vector<cplx>& data, const std::vector<int>& shape, int sign) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    plan = fftw_plan_dft(static_cast<int>(shape.size()),
                         const_cast<int*>(shape.data()),
                         reinterpret_cast<fftw_complex*>(data.data()),
                         reinterpret_cast<fftw_complex*>(data.data()),
                         sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("mellin: FFTW plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
  }
}

bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

MellinGrid::MellinGrid(std::vector<MellinAxis> axes, Octant octant)
    : axes_(std::move(axes)), octant_(octant) {
  if (axes_.empty() || axes_.size() > 3) {
    throw SpecError("MellinGrid: n must be 1..3 (tensor grids explode beyond)");
  }
  if (octant_.dim != static_cast<int>(axes_.size())) {
    throw SpecError("MellinGrid: octant dimension mismatch");
  }
  for (const auto& ax : axes_) {
    if (!is_pow2(ax.count)) throw SpecError("MellinGrid: N must be a power of two");
    if (!(ax.dt > 0.0)) throw SpecError("MellinGrid: dt must be positive");
  }
}

MellinGrid MellinGrid::standard(int n, double t_lo, double t_hi, int count) {
  MellinAxis ax;
  ax.t_min = t_lo;
  ax.count = count;
  ax.dt = (t_hi - t_lo) / count;
  return MellinGrid(std::vector<MellinAxis>(static_cast<size_t>(n), ax),
                    Octant::positive(n));
}

MellinGrid MellinGrid::for_spec(const OperatorSpec& spec, double t_lo, double t_hi,
                                int count) {
  if (spec.measure().kind() == MeasureSpace::Kind::discrete) {
    double log_lambda = 0.0;
    bool power = false;
    for (const auto& e : spec.family().eigenvalues()) {
      if (e.kind == EigenvalueForm::Kind::power && e.base != 1.0) {
        const double l = std::abs(std::log(e.base));
        if (!power || l < log_lambda) log_lambda = l;
        power = true;
      }
    }
    if (power) {
      const double dt_target = (t_hi - t_lo) / count;
      const int m = std::max(1, static_cast<int>(std::round(log_lambda / dt_target)));
      MellinAxis ax;
      ax.dt = log_lambda / m;
      ax.count = count;
      ax.t_min = -0.5 * count * ax.dt;
      return MellinGrid(std::vector<MellinAxis>(static_cast<size_t>(spec.dim()), ax),
                        Octant::positive(spec.dim()));
    }
  }
  return standard(spec.dim(), t_lo, t_hi, count);
}

std::vector<GridAxis> MellinGrid::x_axes() const {
  std::vector<GridAxis> out;
  out.reserve(axes_.size());
  for (const auto& ax : axes_) {
    out.push_back(GridAxis::log_axis(ax.t_min, ax.dt, ax.count));
  }
  return out;
}

std::vector<GridAxis> MellinGrid::s_axes() const {
  std::vector<GridAxis> out;
  out.reserve(axes_.size());
  for (const auto& ax : axes_) {
    GridAxis g;
    g.log_uniform = false;
    const double ds = ax.ds();
    g.nodes.resize(static_cast<size_t>(ax.count));
    g.weights.assign(static_cast<size_t>(ax.count), ds);
    for (int k = 0; k < ax.count; ++k) {
      g.nodes[static_cast<size_t>(k)] = (k - ax.count / 2) * ds;
    }
    out.push_back(std::move(g));
  }
  return out;
}

MellinGrid MellinGrid::axis_grid(int i) const {
  Octant o1 = Octant::positive(1);
  o1.sign[0] = octant_.sign[static_cast<size_t>(i)];
  return MellinGrid({axes_[static_cast<size_t>(i)]}, o1);
}

namespace {

void check_input_matches(const MellinGrid& grid, const GridFunction& f, bool x_side) {
  if (f.dim() != grid.dim()) throw SpecError("mellin: dimension mismatch");
  for (int a = 0; a < grid.dim(); ++a) {
    const MellinAxis& ma = grid.axis(a);
    const GridAxis& ga = f.axis(a);
    if (static_cast<int>(ga.size()) != ma.count) {
      throw SpecError("mellin: grid size mismatch");
    }
    if (x_side) {
      if (!ga.log_uniform || std::abs(ga.t0 - ma.t_min) > 1e-12 ||
          std::abs(ga.dt - ma.dt) > 1e-15) {
        throw SpecError("mellin: f is not sampled on the grid's log axes");
      }
    }
  }
  if (!(f.octant() == grid.octant())) {
    throw SpecError("mellin: hyperoctant mismatch");
  }
}

}  // namespace

GridFunction mellin_forward(const MellinGrid& grid, const GridFunction& f, double q,
                            const MellinOptions& opts) {
  if (!(q >= 1.0)) throw SpecError("mellin_forward: q must lie in [1, inf)");
  check_input_matches(grid, f, true);
  const int n = grid.dim();

  // boundary-shell mass estimate: functions with visible mass at the box
  // edge are truncated by the finite t-range
  {
    double shell = 0.0, total = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
      const double mass = f.weight_at(i) * std::norm(f[i]);
      total += mass;
      size_t rem = i;
      bool boundary = false;
      for (int a = n - 1; a >= 0; --a) {
        const size_t len = f.axis(a).size();
        const size_t idx = rem % len;
        rem /= len;
        boundary = boundary || idx == 0 || idx + 1 == len;
      }
      if (boundary) shell += mass;
    }
    const double frac = total > 0.0 ? std::sqrt(shell / total) : 0.0;
    if (opts.truncation == MellinOptions::Truncation::error &&
        frac > opts.truncation_tol) {
      throw TruncationError(
          "mellin_forward: significant mass at the grid boundary (relative "
          "shell mass " + std::to_string(frac) + "); enlarge the t-range",
          frac);
    }
  }

  const double inv_qp = 1.0 - 1.0 / q;  // 1/q'
  GridFunction out(grid.octant(), grid.s_axes());
  std::vector<cplx>& data = out.values();
  std::vector<int> shape;
  for (int a = 0; a < n; ++a) shape.push_back(grid.axis(a).count);

  // prefactor e^{t/q'} (-1)^m per axis
  for (size_t i = 0; i < f.size(); ++i) {
    size_t rem = i;
    double expo = 0.0;
    int parity = 0;
    for (int a = n - 1; a >= 0; --a) {
      const MellinAxis& ax = grid.axis(a);
      const int idx = static_cast<int>(rem % static_cast<size_t>(ax.count));
      rem /= static_cast<size_t>(ax.count);
      expo += inv_qp * (ax.t_min + idx * ax.dt);
      parity ^= idx & 1;
    }
    data[i] = f[i] * std::exp(expo) * (parity ? -1.0 : 1.0);
  }

  fft_nd(data, shape, +1);

  // postfactor (2 pi)^{-1/2} dt e^{i s_k t_min} per axis
  const double norm1d = 1.0 / std::sqrt(2.0 * kPi);
  for (size_t i = 0; i < data.size(); ++i) {
    size_t rem = i;
    cplx factor = 1.0;
    for (int a = n - 1; a >= 0; --a) {
      const MellinAxis& ax = grid.axis(a);
      const int k = static_cast<int>(rem % static_cast<size_t>(ax.count));
      rem /= static_cast<size_t>(ax.count);
      const double s = (k - ax.count / 2) * ax.ds();
      factor *= norm1d * ax.dt * std::polar(1.0, s * ax.t_min);
    }
    data[i] *= factor;
  }
  return out;
}

GridFunction mellin_inverse(const MellinGrid& grid, const GridFunction& g) {
  check_input_matches(grid, g, false);
  const int n = grid.dim();
  GridFunction out(grid.octant(), grid.x_axes());
  std::vector<cplx>& data = out.values();
  std::vector<int> shape;
  long total = 1;
  for (int a = 0; a < n; ++a) {
    shape.push_back(grid.axis(a).count);
    total *= grid.axis(a).count;
  }

  const double norm1d = std::sqrt(2.0 * kPi);
  for (size_t i = 0; i < g.size(); ++i) {
    size_t rem = i;
    cplx factor = 1.0;
    for (int a = n - 1; a >= 0; --a) {
      const MellinAxis& ax = grid.axis(a);
      const int k = static_cast<int>(rem % static_cast<size_t>(ax.count));
      rem /= static_cast<size_t>(ax.count);
      const double s = (k - ax.count / 2) * ax.ds();
      factor *= norm1d / ax.dt * std::polar(1.0, -s * ax.t_min);
    }
    data[i] = g[i] * factor;
  }

  fft_nd(data, shape, -1);

  const double inv_total = 1.0 / static_cast<double>(total);
  for (size_t i = 0; i < data.size(); ++i) {
    size_t rem = i;
    double expo = 0.0;
    int parity = 0;
    for (int a = n - 1; a >= 0; --a) {
      const MellinAxis& ax = grid.axis(a);
      const int idx = static_cast<int>(rem % static_cast<size_t>(ax.count));
      rem /= static_cast<size_t>(ax.count);
      expo -= 0.5 * (ax.t_min + idx * ax.dt);
      parity ^= idx & 1;
    }
    data[i] *= inv_total * std::exp(expo) * (parity ? -1.0 : 1.0);
  }
  return out;
}

}  // namespace hausdorff
