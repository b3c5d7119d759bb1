#include "hausdorff/functions.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

ScalarField ScalarField::tensor_product(
    std::string name, std::vector<std::function<cplx(double)>> factors,
    std::vector<std::vector<double>> breaks, bool smooth) {
  ScalarField f;
  f.name = std::move(name);
  f.dim = static_cast<int>(factors.size());
  f.smooth = smooth;
  f.tensor = true;
  f.factors = std::move(factors);
  f.axis_breaks = std::move(breaks);
  auto facs = f.factors;  // owned copy for the closure
  f.eval_traced = [facs](const Point& x, EvalTrace*) {
    cplx v = 1.0;
    for (size_t a = 0; a < facs.size(); ++a) {
      v *= facs[a](x[static_cast<int>(a)]);
      if (v == cplx(0.0)) return v;
    }
    return v;
  };
  return f;
}

namespace fields {
namespace {

constexpr double kJumpTol = 1e-12;

ScalarField replicate(const std::string& name, int n,
                      std::function<cplx(double)> factor,
                      std::vector<double> breaks, bool smooth) {
  std::vector<std::function<cplx(double)>> fs(static_cast<size_t>(n), factor);
  std::vector<std::vector<double>> bs(static_cast<size_t>(n), breaks);
  return ScalarField::tensor_product(name, std::move(fs), std::move(bs), smooth);
}

}  // namespace

ScalarField indicator01(int n) {
  auto f = [](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    if (std::abs(x - 1.0) <= kJumpTol) return 0.5;
    return x < 1.0 ? 1.0 : 0.0;
  };
  return replicate("indicator01", n, f, {1.0}, false);
}

ScalarField gauss_bump(int n, double center, double sigma) {
  auto f = [center, sigma](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    const double u = (std::log(x) - center) / sigma;
    return std::exp(-0.5 * u * u);
  };
  return replicate("gauss", n, f, {}, true);
}

ScalarField x_exp(int n, double a) {
  auto f = [a](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    return std::pow(x, a) * std::exp(-x);
  };
  return replicate("xexp", n, f, {}, true);
}

ScalarField pow_indicator(int n, double a) {
  auto f = [a](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    if (std::abs(x - 1.0) <= kJumpTol) return 0.5;
    return x < 1.0 ? std::pow(x, a) : 0.0;
  };
  return replicate("powind", n, f, {1.0}, false);
}

ScalarField exp_decay(int n) {
  auto f = [](double x) -> cplx { return x <= 0.0 ? 0.0 : std::exp(-x); };
  return replicate("expdecay", n, f, {}, true);
}

ScalarField rational_one(int n) {
  auto f = [](double x) -> cplx { return x <= 0.0 ? 0.0 : x / (1.0 + x); };
  return replicate("ratl", n, f, {}, true);
}

ScalarField by_name(const std::string& name, int n) {
  if (name == "indicator01") return indicator01(n);
  if (name == "gauss") return gauss_bump(n);
  if (name == "xexp") return x_exp(n);
  if (name == "powind045") return pow_indicator(n, -0.45);
  if (name == "expdecay") return exp_decay(n);
  if (name == "ratl") return rational_one(n);
  throw SpecError("unknown test function: " + name);
}

std::vector<std::string> shipped_names() {
  return {"indicator01", "gauss", "xexp", "powind045", "expdecay", "ratl"};
}

}  // namespace fields

ScalarField field_from_grid(const GridFunction& g) {
  ScalarField f;
  f.name = "grid";
  f.dim = g.dim();
  f.smooth = true;
  f.tensor = false;
  f.eval_traced = [&g](const Point& x, EvalTrace* trace) -> cplx {
    if (trace) {
      bool esc = false;
      double mag = 0.0;
      const cplx v = g.interpolate(x, &esc, &mag);
      trace->escaped = esc;
      trace->clamped_mag = mag;
      return v;
    }
    return g.interpolate(x);
  };
  return f;
}

GridFunction sample(const ScalarField& f, const Octant& octant,
                    std::vector<GridAxis> axes) {
  if (f.dim != static_cast<int>(axes.size())) {
    throw SpecError("sample: field/grid dimension mismatch");
  }
  GridFunction g(octant, std::move(axes));
  if (f.tensor) {
    // evaluate factors once per axis node, then expand
    std::vector<std::vector<cplx>> fv(static_cast<size_t>(g.dim()));
    for (int a = 0; a < g.dim(); ++a) {
      const GridAxis& ax = g.axis(a);
      fv[static_cast<size_t>(a)].resize(ax.size());
      for (size_t i = 0; i < ax.size(); ++i) {
        fv[static_cast<size_t>(a)][i] =
            f.factors[static_cast<size_t>(a)](octant.sign[static_cast<size_t>(a)] * ax.nodes[i]);
      }
    }
    for (size_t flat = 0; flat < g.size(); ++flat) {
      size_t rem = flat;
      cplx v = 1.0;
      for (int a = g.dim() - 1; a >= 0; --a) {
        const size_t len = g.axis(a).size();
        v *= fv[static_cast<size_t>(a)][rem % len];
        rem /= len;
      }
      g[flat] = v;
    }
    return g;
  }
  for (size_t flat = 0; flat < g.size(); ++flat) {
    g[flat] = f(g.point_at(flat));
  }
  return g;
}

}  // namespace hausdorff
