#include "hausdorff/apply.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "hausdorff/errors.hpp"

namespace hausdorff {
namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HAUSDORFF_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

// Images of f's break positions under u -> a(u)|x_j| = b, one split list
// per measure axis. Only box measures with coordinate/power eigenvalue
// forms produce splits.
void collect_splits(const OperatorSpec& spec, const ScalarField& f, const Point& x,
                    std::vector<std::vector<double>>& splits) {
  for (auto& s : splits) s.clear();
  if (f.axis_breaks.empty()) return;
  const auto& eigs = spec.family().eigenvalues();
  for (int j = 0; j < spec.dim(); ++j) {
    if (static_cast<size_t>(j) >= f.axis_breaks.size()) break;
    const auto& breaks = f.axis_breaks[static_cast<size_t>(j)];
    if (breaks.empty()) continue;
    const EigenvalueForm& e = eigs[static_cast<size_t>(j)];
    const double xj = std::abs(x[j]);
    if (xj == 0.0) continue;
    for (double b : breaks) {
      double u = 0.0;
      switch (e.kind) {
        case EigenvalueForm::Kind::coordinate:
          u = e.reciprocal ? xj / b : b / xj;
          splits[static_cast<size_t>(e.axis)].push_back(u);
          break;
        case EigenvalueForm::Kind::power: {
          const double ratio = e.reciprocal ? xj / b : b / xj;
          if (ratio > 0.0 && e.base > 0.0 && e.base != 1.0) {
            splits[0].push_back(std::log(ratio) / std::log(e.base));
          }
          break;
        }
        default:
          break;
      }
    }
  }
}

struct PointAccum {
  cplx value = 0.0;
  double discarded = 0.0;  // sum of w |Phi| |f(clamped)| over escapes
};

class Integrator {
 public:
  Integrator(const OperatorSpec& spec, const ScalarField& f)
      : spec_(spec),
        f_(f),
        box_(spec.measure().kind() == MeasureSpace::Kind::box),
        splittable_(box_ && !f.axis_breaks.empty() &&
                    spec.kernel().form() != KernelSpec::Form::table) {
    if (box_) splits_.resize(static_cast<size_t>(spec.measure().dim()));
  }

  PointAccum at(const Point& x) {
    PointAccum acc;
    const std::vector<Rule1D>* rules = nullptr;
    bool backbone = true;
    if (splittable_) {
      collect_splits(spec_, f_, x, splits_);
      bool any = false;
      for (auto& s : splits_) any = any || !s.empty();
      if (any) {
        scratch_.clear();
        for (int a = 0; a < spec_.measure().dim(); ++a) {
          scratch_.push_back(composite_gauss(
              spec_.measure().axis(a).breakpoints_with(splits_[static_cast<size_t>(a)]),
              spec_.measure().axis(a).gauss_order));
        }
        rules = &scratch_;
        backbone = false;
      }
    }
    const CommutingFamily& fam = spec_.family();
    Point y;
    EvalTrace trace;
    for_each_node(spec_.measure(), rules, backbone, [&](const Point& u, double w, long idx) {
      const cplx phi = spec_.kernel().eval(u, idx);
      if (phi == cplx(0.0)) return;
      fam.map_point(u, idx, x, y);
      trace.escaped = false;
      trace.clamped_mag = 0.0;
      const cplx fv = f_.eval_traced(y, &trace);
      acc.value += w * phi * fv;
      if (trace.escaped) acc.discarded += std::abs(w * phi) * trace.clamped_mag;
    });
    return acc;
  }

 private:
  const OperatorSpec& spec_;
  const ScalarField& f_;
  bool box_;
  bool splittable_;
  std::vector<std::vector<double>> splits_;
  std::vector<Rule1D> scratch_;
};

}  // namespace

namespace {

// Separable spec + tensor f: run the 1-d factors per axis and expand the
// outer product onto the requested grid. Equal to the dense tensor sum by
// Fubini, at a per-axis cost.
ApplyResult apply_tensor(const OperatorSpec& spec, const ScalarField& f,
                         const Octant& octant, std::vector<GridAxis> axes,
                         const ApplyOptions& opts) {
  const int n = spec.dim();
  std::vector<std::vector<cplx>> axis_values(static_cast<size_t>(n));
  double kernel_mass = 1.0;
  for (int j = 0; j < n; ++j) {
    ScalarField f1;
    {
      // inline 1-d slice (checks.hpp owns the public helper)
      f1.name = f.name;
      f1.dim = 1;
      f1.smooth = f.smooth;
      f1.tensor = true;
      f1.factors = {f.factors[static_cast<size_t>(j)]};
      f1.axis_breaks = {static_cast<size_t>(j) < f.axis_breaks.size()
                            ? f.axis_breaks[static_cast<size_t>(j)]
                            : std::vector<double>{}};
      auto fac = f1.factors.front();
      f1.eval_traced = [fac](const Point& x, EvalTrace*) { return fac(x[0]); };
    }
    Octant o1 = Octant::positive(1);
    o1.sign[0] = octant.sign[static_cast<size_t>(j)];
    ApplyResult r1 = apply(spec.axis_factor(j), f1, o1,
                           {axes[static_cast<size_t>(j)]}, opts);
    axis_values[static_cast<size_t>(j)] = std::move(r1.values.values());
    kernel_mass *= r1.kernel_mass;
  }
  ApplyResult out{GridFunction(octant, std::move(axes)), 0.0, kernel_mass};
  GridFunction& g = out.values;
  for (size_t flat = 0; flat < g.size(); ++flat) {
    size_t rem = flat;
    cplx v = 1.0;
    for (int a = n - 1; a >= 0; --a) {
      const size_t len = g.axis(a).size();
      v *= axis_values[static_cast<size_t>(a)][rem % len];
      rem /= len;
    }
    g[flat] = v;
  }
  return out;
}

}  // namespace

ApplyResult apply(const OperatorSpec& spec, const ScalarField& f,
                  const Octant& octant, std::vector<GridAxis> axes,
                  const ApplyOptions& opts) {
  if (f.dim != spec.dim() || static_cast<int>(axes.size()) != spec.dim() ||
      octant.dim != spec.dim()) {
    throw SpecError("apply: dimension mismatch between spec, field and grid");
  }
  if (spec.dim() > 1 && spec.separable() && f.tensor) {
    return apply_tensor(spec, f, octant, std::move(axes), opts);
  }
  ApplyResult out{GridFunction(octant, std::move(axes)), 0.0, 0.0};
  GridFunction& g = out.values;

  double kernel_mass = 0.0;
  for_each_node(spec.measure(), nullptr, true, [&](const Point& u, double w, long idx) {
    kernel_mass += std::abs(w * spec.kernel().eval(u, idx));
  });
  out.kernel_mass = kernel_mass;

  const size_t total = g.size();
  const int threads = std::min<int>(resolve_threads(opts.threads),
                                    static_cast<int>(std::max<size_t>(total, 1)));
  std::vector<double> disc_sq(static_cast<size_t>(threads), 0.0);

  auto worker = [&](int tid) {
    Integrator integ(spec, f);
    const size_t chunk = (total + threads - 1) / static_cast<size_t>(threads);
    const size_t lo = chunk * static_cast<size_t>(tid);
    const size_t hi = std::min(total, lo + chunk);
    double d2 = 0.0;
    for (size_t i = lo; i < hi; ++i) {
      PointAccum acc = integ.at(g.point_at(i));
      g[i] = acc.value;
      d2 += g.weight_at(i) * acc.discarded * acc.discarded;
    }
    disc_sq[static_cast<size_t>(tid)] = d2;
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  double d2 = 0.0;
  for (double v : disc_sq) d2 += v;
  const double result_norm = g.norm_l2();
  out.truncation_estimate =
      result_norm > 0.0 ? std::sqrt(d2) / result_norm : std::sqrt(d2);

  if (opts.truncation == ApplyOptions::Truncation::error &&
      out.truncation_estimate > opts.truncation_tol) {
    throw TruncationError(
        "apply: evaluation left the representable domain of f; relative "
        "discarded-mass estimate " + std::to_string(out.truncation_estimate),
        out.truncation_estimate);
  }
  return out;
}

cplx apply_at(const OperatorSpec& spec, const ScalarField& f, const Point& x) {
  Integrator integ(spec, f);
  return integ.at(x).value;
}

OperatorSpec adjoint_spec(const OperatorSpec& spec) {
  KernelSpec adj = KernelSpec::derived(
      [ker = spec.kernel(), fam = spec.family()](const Point& u, long idx) {
        return std::conj(ker.eval(u, idx)) * std::exp(-fam.log_det(u, idx));
      },
      spec.kernel().claims_nonnegative(), "adjoint(" + spec.kernel().label() + ")");
  return OperatorSpec(spec.measure(), std::move(adj), spec.family().inverted(),
                      spec.p(), spec.dim());
}

ApplyResult apply_adjoint(const OperatorSpec& spec, const ScalarField& f,
                          const Octant& octant, std::vector<GridAxis> axes,
                          const ApplyOptions& opts) {
  return apply(adjoint_spec(spec), f, octant, std::move(axes), opts);
}

}  // namespace hausdorff
