#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace hausdorff {

using cplx = std::complex<double>;

/// Hard cap on spatial dimension. Tensor grids explode beyond n = 3; the
/// extra slot leaves headroom for parameter spaces Omega of dimension 4.
inline constexpr int kMaxDim = 4;

inline constexpr double kPi = 3.14159265358979323846;

/// Fixed-capacity point in R^m, m <= kMaxDim. Value type, no allocation.
struct Point {
  std::array<double, kMaxDim> c{};
  int dim = 0;

  Point() = default;
  explicit Point(int n) : dim(n) {}
  Point(std::initializer_list<double> xs) {
    for (double x : xs) c[dim++] = x;
  }
  static Point from(std::span<const double> xs) {
    Point p;
    p.dim = static_cast<int>(xs.size());
    for (int i = 0; i < p.dim; ++i) p.c[i] = xs[i];
    return p;
  }

  double& operator[](int i) { return c[static_cast<size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  std::span<const double> span() const { return {c.data(), static_cast<size_t>(dim)}; }
  std::span<double> span() { return {c.data(), static_cast<size_t>(dim)}; }
};

/// Hyperoctant tag: one sign per coordinate. Default is the positive octant.
struct Octant {
  std::array<int8_t, kMaxDim> sign{1, 1, 1, 1};
  int dim = 1;

  static Octant positive(int n) {
    Octant o;
    o.dim = n;
    return o;
  }
  bool operator==(const Octant&) const = default;
};

}  // namespace hausdorff
