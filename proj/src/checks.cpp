#include "hausdorff/checks.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {
namespace {

const ApplyOptions kInternal{ApplyOptions::Truncation::warn, 1e-8, 0};

}  // namespace

double norm_bound_lp(const OperatorSpec& spec) {
  if (spec.dim() > 1 && spec.separable()) {
    double bound = 1.0;
    for (int j = 0; j < spec.dim(); ++j) bound *= norm_bound_lp(spec.axis_factor(j));
    return bound;
  }
  const double inv_p = 1.0 / spec.p();
  double bound = 0.0;
  for_each_node(spec.measure(), nullptr, true, [&](const Point& u, double w, long idx) {
    bound += w * std::abs(spec.kernel().eval(u, idx)) *
             std::exp(-inv_p * spec.family().log_det(u, idx));
  });
  return bound;
}

double rayleigh_quotient(const OperatorSpec& spec, const ScalarField& f,
                         const Octant& octant, const std::vector<GridAxis>& axes) {
  ApplyResult hf = apply(spec, f, octant, axes, kInternal);
  GridFunction fg = sample(f, octant, axes);
  const double fn = fg.norm_lp(spec.p());
  if (fn == 0.0) throw SpecError("rayleigh_quotient: f vanishes on the grid");
  return hf.values.norm_lp(spec.p()) / fn;
}

ScalarField axis_field(const ScalarField& f, int j) {
  if (!f.tensor) throw SpecError("axis_field: field is not a tensor product");
  ScalarField out;
  out.name = f.name + "[" + std::to_string(j) + "]";
  out.dim = 1;
  out.smooth = f.smooth;
  out.tensor = true;
  out.factors = {f.factors[static_cast<size_t>(j)]};
  out.axis_breaks = {static_cast<size_t>(j) < f.axis_breaks.size()
                         ? f.axis_breaks[static_cast<size_t>(j)]
                         : std::vector<double>{}};
  auto fac = out.factors.front();
  out.eval_traced = [fac](const Point& x, EvalTrace*) { return fac(x[0]); };
  return out;
}

double tensor_l2(std::span<const GridFunction> a) {
  double p = 1.0;
  for (const auto& g : a) p *= g.norm_l2();
  return p;
}

double tensor_diff_l2(std::span<const GridFunction> a, std::span<const GridFunction> b) {
  // (x)a - (x)b = sum_j T_j,  T_j = a_1..a_{j-1} (x) (a_j - b_j) (x) b_{j+1}..b_n
  const size_t n = a.size();
  if (b.size() != n || n == 0) throw SpecError("tensor_diff_l2: size mismatch");
  std::vector<GridFunction> diff;
  diff.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    GridFunction d = a[j];
    for (size_t i = 0; i < d.size(); ++i) d[i] -= b[j][i];
    diff.push_back(std::move(d));
  }
  // Gram matrix of the telescoped terms via per-axis inner products.
  auto factor_inner = [&](size_t j, size_t k, size_t axis) -> cplx {
    const GridFunction& lhs = axis < j ? a[axis] : (axis == j ? diff[axis] : b[axis]);
    const GridFunction& rhs = axis < k ? a[axis] : (axis == k ? diff[axis] : b[axis]);
    return lhs.inner(rhs);
  };
  double total = 0.0;
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      cplx g = 1.0;
      for (size_t axis = 0; axis < n; ++axis) g *= factor_inner(j, k, axis);
      total += g.real();
    }
  }
  return std::sqrt(std::max(0.0, total));
}

namespace {

// Per-axis H H* f_j and H* H f_j for separable specs.
void normality_axis_pair(const OperatorSpec& spec1d, const ScalarField& f1d,
                         const Octant& oct1, const std::vector<GridAxis>& ax1,
                         GridFunction& hhstar, GridFunction& hstarh) {
  const OperatorSpec adj = adjoint_spec(spec1d);
  ApplyResult inner_adj = apply(adj, f1d, oct1, ax1, kInternal);
  hhstar = apply(spec1d, field_from_grid(inner_adj.values), oct1, ax1, kInternal).values;
  ApplyResult inner_fwd = apply(spec1d, f1d, oct1, ax1, kInternal);
  hstarh = apply(adj, field_from_grid(inner_fwd.values), oct1, ax1, kInternal).values;
}

Octant axis_octant(const Octant& o, int j) {
  Octant o1 = Octant::positive(1);
  o1.sign[0] = o.sign[static_cast<size_t>(j)];
  return o1;
}

}  // namespace

double normality_residual(const OperatorSpec& spec, const ScalarField& f,
                          const Octant& octant, const std::vector<GridAxis>& axes) {
  if (spec.p() != 2.0) {
    throw SpecError("normality_residual: defined for p = 2 only");
  }
  const int n = spec.dim();
  if (n > 1 && spec.separable() && f.tensor) {
    std::vector<GridFunction> a, b;
    double fnorm = 1.0;
    for (int j = 0; j < n; ++j) {
      const OperatorSpec s1 = spec.axis_factor(j);
      const ScalarField f1 = axis_field(f, j);
      const Octant o1 = axis_octant(octant, j);
      const std::vector<GridAxis> ax1{axes[static_cast<size_t>(j)]};
      GridFunction hh(o1, ax1), sh(o1, ax1);
      normality_axis_pair(s1, f1, o1, ax1, hh, sh);
      a.push_back(std::move(hh));
      b.push_back(std::move(sh));
      fnorm *= sample(f1, o1, ax1).norm_l2();
    }
    if (fnorm == 0.0) throw SpecError("normality_residual: f vanishes on the grid");
    return tensor_diff_l2(a, b) / fnorm;
  }
  const OperatorSpec adj = adjoint_spec(spec);
  ApplyResult hstar_f = apply(adj, f, octant, axes, kInternal);
  GridFunction hh = apply(spec, field_from_grid(hstar_f.values), octant, axes, kInternal).values;
  ApplyResult h_f = apply(spec, f, octant, axes, kInternal);
  GridFunction sh = apply(adj, field_from_grid(h_f.values), octant, axes, kInternal).values;
  const double fnorm = sample(f, octant, axes).norm_l2();
  if (fnorm == 0.0) throw SpecError("normality_residual: f vanishes on the grid");
  double acc = 0.0;
  for (size_t i = 0; i < hh.size(); ++i) {
    acc += hh.weight_at(i) * std::norm(hh[i] - sh[i]);
  }
  return std::sqrt(acc) / fnorm;
}

DualityCheck adjoint_duality(const OperatorSpec& spec, const ScalarField& f,
                             const ScalarField& g, const Octant& octant,
                             const std::vector<GridAxis>& axes) {
  const int n = spec.dim();
  DualityCheck out{};
  double fn = 0.0, gn = 0.0;
  if (n > 1 && spec.separable() && f.tensor && g.tensor) {
    cplx lhs = 1.0, rhs = 1.0;
    fn = gn = 1.0;
    for (int j = 0; j < n; ++j) {
      const OperatorSpec s1 = spec.axis_factor(j);
      const ScalarField f1 = axis_field(f, j);
      const ScalarField g1 = axis_field(g, j);
      const Octant o1 = axis_octant(octant, j);
      const std::vector<GridAxis> ax1{axes[static_cast<size_t>(j)]};
      GridFunction fg = sample(f1, o1, ax1);
      GridFunction gg = sample(g1, o1, ax1);
      GridFunction hf = apply(s1, f1, o1, ax1, kInternal).values;
      GridFunction hsg = apply(adjoint_spec(s1), g1, o1, ax1, kInternal).values;
      lhs *= hf.inner(gg);
      rhs *= fg.inner(hsg);
      fn *= fg.norm_l2();
      gn *= gg.norm_l2();
    }
    out.lhs = lhs;
    out.rhs = rhs;
  } else {
    GridFunction fg = sample(f, octant, axes);
    GridFunction gg = sample(g, octant, axes);
    GridFunction hf = apply(spec, f, octant, axes, kInternal).values;
    GridFunction hsg = apply(adjoint_spec(spec), g, octant, axes, kInternal).values;
    out.lhs = hf.inner(gg);
    out.rhs = fg.inner(hsg);
    fn = fg.norm_l2();
    gn = gg.norm_l2();
  }
  const double scale = fn * gn;
  out.violation = scale > 0.0 ? std::abs(out.lhs - out.rhs) / scale
                              : std::abs(out.lhs - out.rhs);
  return out;
}

RegularityReport regularity_check(const OperatorSpec& spec, const ScalarField& f,
                                  std::span<const double> probe_radii, cplx limit) {
  RegularityReport rep;
  cplx integral = 0.0;
  for_each_node(spec.measure(), nullptr, true, [&](const Point& u, double w, long idx) {
    integral += w * spec.kernel().eval(u, idx);
  });
  rep.kernel_integral = integral;
  for (double r : probe_radii) {
    Point x(spec.dim());
    for (int j = 0; j < spec.dim(); ++j) x[j] = r;
    const cplx v = apply_at(spec, f, x);
    rep.probes.push_back({r, v, std::abs(v - limit)});
  }
  return rep;
}

}  // namespace hausdorff
