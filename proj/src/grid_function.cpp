#include "hausdorff/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

GridAxis GridAxis::log_axis(double t0, double dt, int count) {
  if (count < 2 || !(dt > 0.0)) throw SpecError("GridAxis::log_axis: bad parameters");
  GridAxis ax;
  ax.log_uniform = true;
  ax.t0 = t0;
  ax.dt = dt;
  ax.nodes.resize(static_cast<size_t>(count));
  ax.weights.resize(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = std::exp(t0 + i * dt);
    ax.nodes[static_cast<size_t>(i)] = x;
    ax.weights[static_cast<size_t>(i)] = dt * x;
  }
  return ax;
}

GridAxis GridAxis::linear_axis(double lo, double hi, int count) {
  if (count < 2 || !(lo < hi)) throw SpecError("GridAxis::linear_axis: bad parameters");
  GridAxis ax;
  const double h = (hi - lo) / (count - 1);
  ax.nodes.resize(static_cast<size_t>(count));
  ax.weights.assign(static_cast<size_t>(count), h);
  ax.weights.front() = ax.weights.back() = 0.5 * h;
  for (int i = 0; i < count; ++i) ax.nodes[static_cast<size_t>(i)] = lo + i * h;
  return ax;
}

GridAxis GridAxis::from_nodes(std::vector<double> nodes) {
  if (nodes.size() < 2) throw SpecError("GridAxis::from_nodes: need >= 2 nodes");
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i] < nodes[i + 1])) {
      throw SpecError("GridAxis::from_nodes: nodes must be strictly increasing");
    }
  }
  GridAxis ax;
  ax.weights.resize(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const double left = i == 0 ? nodes[0] : nodes[i - 1];
    const double right = i + 1 == nodes.size() ? nodes.back() : nodes[i + 1];
    ax.weights[i] = 0.5 * (right - left);
  }
  ax.nodes = std::move(nodes);
  return ax;
}

GridFunction::GridFunction(Octant octant, std::vector<GridAxis> axes)
    : octant_(octant), axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > kMaxDim) {
    throw SpecError("GridFunction: dimension out of range");
  }
  if (octant_.dim != static_cast<int>(axes_.size())) {
    throw SpecError("GridFunction: octant dimension mismatch");
  }
  size_t total = 1;
  for (const auto& ax : axes_) {
    if (ax.size() < 2) throw SpecError("GridFunction: axis too short");
    for (double w : ax.weights) {
      if (!(w > 0.0)) throw SpecError("GridFunction: weights must be positive");
    }
    total *= ax.size();
  }
  values_.assign(total, cplx(0.0));
}

Point GridFunction::point_at(size_t flat) const {
  Point p(dim());
  for (int a = dim() - 1; a >= 0; --a) {
    const size_t len = axes_[static_cast<size_t>(a)].size();
    p[a] = octant_.sign[static_cast<size_t>(a)] *
           axes_[static_cast<size_t>(a)].nodes[flat % len];
    flat /= len;
  }
  return p;
}

double GridFunction::weight_at(size_t flat) const {
  double w = 1.0;
  for (int a = dim() - 1; a >= 0; --a) {
    const size_t len = axes_[static_cast<size_t>(a)].size();
    w *= axes_[static_cast<size_t>(a)].weights[flat % len];
    flat /= len;
  }
  return w;
}

double GridFunction::norm_l2() const {
  double s = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) s += weight_at(i) * std::norm(values_[i]);
  return std::sqrt(s);
}

double GridFunction::norm_lp(double p) const {
  double s = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) {
    s += weight_at(i) * std::pow(std::abs(values_[i]), p);
  }
  return std::pow(s, 1.0 / p);
}

cplx GridFunction::inner(const GridFunction& g) const {
  if (g.size() != size()) throw SpecError("GridFunction::inner: shape mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) {
    s += weight_at(i) * values_[i] * std::conj(g.values_[i]);
  }
  return s;
}

namespace {

struct AxisStencil {
  size_t base;        // first of up to 4 node indices
  int count;          // stencil width
  double w[4];        // Lagrange weights
};

// 4-point Lagrange stencil around coordinate y on the axis; clamped at the
// grid edges.
AxisStencil stencil_for(const GridAxis& ax, double y) {
  const size_t n = ax.size();
  size_t i1;  // left node of the bracketing pair
  if (ax.log_uniform) {
    const double tau = (std::log(y) - ax.t0) / ax.dt;
    i1 = static_cast<size_t>(std::clamp<long>(static_cast<long>(std::floor(tau)), 0,
                                              static_cast<long>(n) - 2));
  } else {
    auto it = std::upper_bound(ax.nodes.begin(), ax.nodes.end(), y);
    long k = std::clamp<long>(it - ax.nodes.begin() - 1, 0, static_cast<long>(n) - 2);
    i1 = static_cast<size_t>(k);
  }
  const size_t lo = i1 == 0 ? 0 : i1 - 1;
  const size_t hi = std::min(n - 1, i1 + 2);
  AxisStencil st;
  st.base = lo;
  st.count = static_cast<int>(hi - lo + 1);
  for (int a = 0; a < st.count; ++a) {
    double w = 1.0;
    const double xa = ax.nodes[lo + static_cast<size_t>(a)];
    for (int b = 0; b < st.count; ++b) {
      if (a == b) continue;
      const double xb = ax.nodes[lo + static_cast<size_t>(b)];
      w *= (y - xb) / (xa - xb);
    }
    st.w[a] = w;
  }
  return st;
}

}  // namespace

cplx GridFunction::interpolate(const Point& x, bool* escaped,
                               double* clamped_mag) const {
  const int n = dim();
  AxisStencil st[kMaxDim];
  bool out_of_box = false;
  Point clamped = x;
  for (int a = 0; a < n; ++a) {
    const double xa = x[a];
    // off-octant: exact zero by the orthogonal decomposition
    if (xa * octant_.sign[static_cast<size_t>(a)] <= 0.0) return cplx(0.0);
    const double y = std::abs(xa);
    const GridAxis& ax = axes_[static_cast<size_t>(a)];
    if (y < ax.nodes.front() || y > ax.nodes.back()) {
      out_of_box = true;
      clamped[a] = octant_.sign[static_cast<size_t>(a)] *
                   std::clamp(y, ax.nodes.front(), ax.nodes.back());
    }
  }
  if (out_of_box) {
    if (escaped) *escaped = true;
    if (clamped_mag) {
      bool dummy = false;
      *clamped_mag = std::abs(interpolate(clamped, &dummy, nullptr));
    }
    return cplx(0.0);
  }
  for (int a = 0; a < n; ++a) {
    st[a] = stencil_for(axes_[static_cast<size_t>(a)], std::abs(x[a]));
  }
  // tensor contraction over up to 4^n stencil points
  cplx acc = 0.0;
  int odo[kMaxDim] = {0, 0, 0, 0};
  for (;;) {
    double w = 1.0;
    size_t flat = 0;
    for (int a = 0; a < n; ++a) {
      w *= st[a].w[odo[a]];
      flat = flat * axes_[static_cast<size_t>(a)].size() + st[a].base +
             static_cast<size_t>(odo[a]);
    }
    acc += w * values_[flat];
    int a = n - 1;
    for (; a >= 0; --a) {
      if (++odo[a] < st[a].count) break;
      odo[a] = 0;
    }
    if (a < 0) break;
  }
  return acc;
}

}  // namespace hausdorff
