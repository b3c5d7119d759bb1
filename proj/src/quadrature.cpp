#include "hausdorff/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "hausdorff/types.hpp"

namespace hausdorff {
namespace {

Rule1D make_gauss(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  Rule1D r;
  r.nodes.resize(static_cast<size_t>(order));
  r.weights.resize(static_cast<size_t>(order));
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.nodes[static_cast<size_t>(i)] = -x;
    r.nodes[static_cast<size_t>(n - 1 - i)] = x;
    r.weights[static_cast<size_t>(i)] = w;
    r.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  return r;
}

}  // namespace

const Rule1D& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, Rule1D> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gauss(order)).first;
  return it->second;
}

Rule1D composite_gauss(std::span<const double> breakpoints, int order) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("composite_gauss: need at least 2 breakpoints");
  }
  const Rule1D& base = gauss_legendre(order);
  Rule1D out;
  out.nodes.reserve((breakpoints.size() - 1) * base.size());
  out.weights.reserve(out.nodes.capacity());
  for (size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p], b = breakpoints[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    if (half <= 0.0) continue;
    for (size_t i = 0; i < base.size(); ++i) {
      out.nodes.push_back(mid + half * base.nodes[i]);
      out.weights.push_back(half * base.weights[i]);
    }
  }
  return out;
}

std::vector<double> AxisQuadrature::breakpoints() const {
  if (!(lo < hi)) throw std::invalid_argument("AxisQuadrature: lo >= hi");
  const double length = hi - lo;
  std::vector<double> pts;
  const int nb = std::max(1, base_panels);
  for (int i = 0; i <= nb; ++i) pts.push_back(lo + length * i / nb);
  auto add_geo = [&](bool from_lo) {
    // Distances below a few ulps of the endpoint collapse in double
    // arithmetic (1 - 1e-22 == 1.0); clamp the grading there. The mass
    // beyond that resolution is irrecoverable dust in this coordinate.
    const double endpoint = from_lo ? lo : hi;
    const double fp_floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(endpoint);
    double d = std::max(length * geo_floor, fp_floor);
    while (d < length) {
      pts.push_back(from_lo ? lo + d : hi - d);
      d /= geo_ratio;
    }
  };
  if (grade_lo) add_geo(true);
  if (grade_hi) add_geo(false);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> AxisQuadrature::breakpoints_with(
    std::span<const double> splits) const {
  std::vector<double> pts = breakpoints();
  bool dirty = false;
  for (double s : splits) {
    if (s > lo && s < hi) {
      pts.push_back(s);
      dirty = true;
    }
  }
  if (dirty) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  return pts;
}

std::vector<double> refine_log_variation(std::span<const double> breakpoints,
                                         double max_log_step) {
  std::vector<double> out;
  for (size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p], b = breakpoints[p + 1];
    out.push_back(a);
    if (a <= 0.0) continue;  // geometric grading owns the origin
    const double steps = std::log(b / a) / max_log_step;
    if (steps > 1.0) {
      const int m = static_cast<int>(std::ceil(steps));
      const double ratio = std::pow(b / a, 1.0 / m);
      double x = a;
      for (int i = 1; i < m; ++i) {
        x *= ratio;
        out.push_back(x);
      }
    }
  }
  out.push_back(breakpoints.back());
  return out;
}

}  // namespace hausdorff
