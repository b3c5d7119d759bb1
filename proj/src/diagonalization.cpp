#include "hausdorff/diagonalization.hpp"

#include <cmath>

#include "hausdorff/apply.hpp"
#include "hausdorff/checks.hpp"
#include "hausdorff/errors.hpp"

namespace hausdorff {
namespace {

const ApplyOptions kWarnApply{ApplyOptions::Truncation::warn, 1e-8, 0};
const MellinOptions kWarnMellin{MellinOptions::Truncation::warn, 1e-6};

// route A: M(apply(f)); route B: phi . M(f)
void axis_routes(const OperatorSpec& spec, const ScalarField& f, const Symbol& sym,
                 const MellinGrid& grid, GridFunction& route_a, GridFunction& route_b) {
  ApplyResult hf = apply(spec, f, grid.octant(), grid.x_axes(), kWarnApply);
  route_a = mellin_forward(grid, hf.values, 2.0, kWarnMellin);
  GridFunction fg = sample(f, grid.octant(), grid.x_axes());
  route_b = mellin_forward(grid, fg, 2.0, kWarnMellin);
  for (size_t i = 0; i < route_b.size(); ++i) {
    route_b[i] *= sym.eval(route_b.point_at(i));
  }
}

}  // namespace

double diagonalization_residual(const OperatorSpec& spec, const ScalarField& f,
                                const MellinGrid& grid,
                                const std::optional<Symbol>& symbol) {
  if (spec.p() != 2.0) {
    throw SpecError("diagonalization_residual: the multiplication model holds at p = 2");
  }
  if (!spec.family().diagonal_basis()) {
    throw SpecError("diagonalization_residual: family must be diagonal; "
                    "conjugate by rotate_frame first");
  }
  if (grid.dim() != spec.dim()) {
    throw SpecError("diagonalization_residual: grid dimension mismatch");
  }
  const Symbol sym = symbol ? *symbol : Symbol::for_spec(spec);

  const int n = spec.dim();
  if (n > 1 && spec.separable() && f.tensor && sym.separable()) {
    std::vector<GridFunction> a, b;
    for (int j = 0; j < n; ++j) {
      const MellinGrid g1 = grid.axis_grid(j);
      GridFunction ra(g1.octant(), g1.s_axes()), rb = ra;
      axis_routes(spec.axis_factor(j), axis_field(f, j), sym.axis_factor(j), g1, ra, rb);
      a.push_back(std::move(ra));
      b.push_back(std::move(rb));
    }
    const double denom = tensor_l2(b);
    if (denom == 0.0) throw SpecError("diagonalization_residual: phi.Mf vanishes");
    return tensor_diff_l2(a, b) / denom;
  }

  size_t total = 1;
  for (int a = 0; a < n; ++a) total *= static_cast<size_t>(grid.axis(a).count);
  if (total > (1u << 22)) {
    throw SpecError("diagonalization_residual: dense grid too large; use a "
                    "separable spec/tensor f or a smaller grid");
  }

  GridFunction ra(grid.octant(), grid.s_axes()), rb = ra;
  axis_routes(spec, f, sym, grid, ra, rb);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < ra.size(); ++i) {
    const double w = ra.weight_at(i);
    num += w * std::norm(ra[i] - rb[i]);
    den += w * std::norm(rb[i]);
  }
  if (den == 0.0) throw SpecError("diagonalization_residual: phi.Mf vanishes");
  return std::sqrt(num / den);
}

ScalarField rotate_frame(const ScalarField& f, std::span<const double> c_row_major,
                         int n) {
  if (f.dim != n || c_row_major.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw SpecError("rotate_frame: shape mismatch");
  }
  // orthogonality: C^T C = I within 1e-10
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += c_row_major[static_cast<size_t>(k) * n + i] *
             c_row_major[static_cast<size_t>(k) * n + j];
      }
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-10) {
        throw SpecError("rotate_frame: matrix is not orthogonal (tol 1e-10)");
      }
    }
  }
  std::vector<double> c(c_row_major.begin(), c_row_major.end());
  ScalarField out;
  out.name = f.name + "@rot";
  out.dim = n;
  out.smooth = f.smooth;
  out.tensor = false;
  auto inner = f.eval_traced;
  out.eval_traced = [inner, c, n](const Point& x, EvalTrace* trace) {
    Point y(n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += c[static_cast<size_t>(i) * n + j] * x[j];
      y[i] = s;
    }
    return inner(y, trace);
  };
  return out;
}

}  // namespace hausdorff
