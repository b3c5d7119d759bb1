#include "hausdorff/symbol.hpp"

#include <cmath>

#include "hausdorff/checks.hpp"
#include "hausdorff/errors.hpp"
#include "hausdorff/gamma.hpp"

namespace hausdorff {

struct Symbol::Impl {
  Variant variant = Variant::constant;
  int n = 1;
  double p = 2.0;
  bool nonneg = false;
  bool closed = true;
  bool decays = false;
  double ck_k = 1.0;
  cplx constant_value = 1.0;
  std::vector<cplx> coeffs;
  std::vector<Point> logas;
  std::shared_ptr<const OperatorSpec> spec;
  long max_axis_nodes = 32768;
  double l1 = 0.0;
  enum class Op { none, conj, product } op = Op::none;
  std::shared_ptr<const Impl> a, b;
};

namespace {

using Impl = Symbol::Impl;

cplx eval_impl(const Impl& im, const Point& s);

cplx quad_eval_box(const OperatorSpec& spec, const Point& s, long budget) {
  const MeasureSpace& ms = spec.measure();
  const int m = ms.dim();
  const auto& eigs = spec.family().eigenvalues();
  const bool table_kernel = spec.kernel().form() == KernelSpec::Form::table;

  std::vector<Rule1D> rules;
  bool refined = false;
  for (int a = 0; a < m; ++a) {
    double s_log = 0.0, s_lin = 0.0;
    for (int j = 0; j < spec.dim(); ++j) {
      const EigenvalueForm& e = eigs[static_cast<size_t>(j)];
      if (e.kind == EigenvalueForm::Kind::coordinate && e.axis == a) {
        s_log += std::abs(s[j]);
      } else if (e.kind == EigenvalueForm::Kind::power && a == 0) {
        s_lin += std::abs(s[j]) * std::abs(std::log(e.base));
      }
    }
    std::vector<double> bp = ms.axis(a).breakpoints();
    if (s_log > 0.0) {
      const double max_log_step = 2.0 * kPi / s_log;
      if (table_kernel) {
        double worst = 0.0;
        for (size_t i = 0; i + 1 < bp.size(); ++i) {
          if (bp[i] > 0.0) worst = std::max(worst, std::log(bp[i + 1] / bp[i]));
        }
        if (worst > max_log_step) {
          throw OscillationBudgetError(
              "symbol_quadrature: tabulated kernel pins the rule; requested "
              "frequency exceeds its oscillation capacity",
              s_log, 2.0 * kPi / std::max(worst, 1e-300));
        }
      } else {
        auto refined_bp = refine_log_variation(bp, max_log_step);
        refined = refined || refined_bp.size() != bp.size();
        bp = std::move(refined_bp);
      }
    }
    if (s_lin > 0.0 && !table_kernel) {
      const double max_step = 2.0 * kPi / s_lin;
      std::vector<double> out;
      for (size_t i = 0; i + 1 < bp.size(); ++i) {
        out.push_back(bp[i]);
        const int parts = static_cast<int>(std::ceil((bp[i + 1] - bp[i]) / max_step));
        for (int q = 1; q < parts; ++q) {
          out.push_back(bp[i] + (bp[i + 1] - bp[i]) * q / parts);
        }
      }
      out.push_back(bp.back());
      refined = refined || out.size() != bp.size();
      bp = std::move(out);
    }
    const long nodes = static_cast<long>(bp.size() - 1) * ms.axis(a).gauss_order;
    if (nodes > budget) {
      throw OscillationBudgetError(
          "symbol_quadrature: oscillation refinement exceeds the node budget "
          "(achieved error not bounded at this frequency)",
          s_log + s_lin, static_cast<double>(budget));
    }
    rules.push_back(composite_gauss(bp, ms.axis(a).gauss_order));
  }

  const double inv_p = 1.0 / spec.p();
  cplx acc = 0.0;
  for_each_node(ms, &rules, !refined, [&](const Point& u, double w, long idx) {
    const cplx phi = spec.kernel().eval(u, idx);
    if (phi == cplx(0.0)) return;
    double logdet = 0.0, phase = 0.0;
    for (int j = 0; j < spec.dim(); ++j) {
      const double la = eigs[static_cast<size_t>(j)].log_eval(u, idx);
      logdet += la;
      phase += s[j] * la;
    }
    acc += w * phi * std::exp(-inv_p * logdet) * std::polar(1.0, -phase);
  });
  return acc;
}

cplx quad_eval(const OperatorSpec& spec, const Point& s, long budget) {
  if (spec.measure().kind() == MeasureSpace::Kind::discrete) {
    const double inv_p = 1.0 / spec.p();
    cplx acc = 0.0;
    for_each_node(spec.measure(), nullptr, true, [&](const Point& u, double w, long idx) {
      const cplx phi = spec.kernel().eval(u, idx);
      if (phi == cplx(0.0)) return;
      double logdet = 0.0, phase = 0.0;
      for (int j = 0; j < spec.dim(); ++j) {
        const double la = spec.family().eigenvalues()[static_cast<size_t>(j)].log_eval(u, idx);
        logdet += la;
        phase += s[j] * la;
      }
      acc += w * phi * std::exp(-inv_p * logdet) * std::polar(1.0, -phase);
    });
    return acc;
  }
  if (spec.dim() > 1 && spec.separable()) {
    cplx prod = 1.0;
    for (int j = 0; j < spec.dim(); ++j) {
      prod *= quad_eval(spec.axis_factor(j), Point{s[j]}, budget);
    }
    return prod;
  }
  return quad_eval_box(spec, s, budget);
}

bool is_unit_box(const MeasureSpace& ms) {
  if (ms.kind() != MeasureSpace::Kind::box) return false;
  for (int a = 0; a < ms.dim(); ++a) {
    if (ms.lower(a) != 0.0 || ms.upper(a) != 1.0) return false;
  }
  return true;
}

cplx eval_impl(const Impl& im, const Point& s) {
  switch (im.variant) {
    case Symbol::Variant::constant:
      return im.constant_value;
    case Symbol::Variant::cesaro: {
      cplx prod = 1.0;
      const double re = 1.0 - 1.0 / im.p;
      for (int j = 0; j < im.n; ++j) prod *= 1.0 / cplx(re, -s[j]);
      return prod;
    }
    case Symbol::Variant::ck: {
      const cplx c(1.0 - 1.0 / im.p, -s[0]);
      return complex_gamma(im.ck_k + 1.0) * complex_gamma(c) /
             complex_gamma(im.ck_k + c);
    }
    case Symbol::Variant::exp_sum: {
      cplx acc = 0.0;
      for (size_t k = 0; k < im.coeffs.size(); ++k) {
        double phase = 0.0;
        for (int j = 0; j < im.n; ++j) phase += s[j] * im.logas[k][j];
        acc += im.coeffs[k] * std::polar(1.0, -phase);
      }
      return acc;
    }
    case Symbol::Variant::quadrature:
      return quad_eval(*im.spec, s, im.max_axis_nodes);
    case Symbol::Variant::composed:
      if (im.op == Impl::Op::conj) return std::conj(eval_impl(*im.a, s));
      return eval_impl(*im.a, s) * eval_impl(*im.b, s);
  }
  return 0.0;
}

}  // namespace

Symbol Symbol::for_spec(const OperatorSpec& spec) {
  const MeasureSpace& ms = spec.measure();
  if (ms.kind() == MeasureSpace::Kind::discrete) {
    std::vector<cplx> coeffs;
    std::vector<Point> logas;
    const double inv_p = 1.0 / spec.p();
    for (size_t k = 0; k < ms.atom_count(); ++k) {
      const long idx = static_cast<long>(k);
      const cplx phi = spec.kernel().eval(ms.atom(k), idx);
      Point la(spec.dim());
      double logdet = 0.0;
      for (int j = 0; j < spec.dim(); ++j) {
        la[j] = spec.family().eigenvalues()[static_cast<size_t>(j)].log_eval(ms.atom(k), idx);
        logdet += la[j];
      }
      coeffs.push_back(ms.weight(k) * phi * std::exp(-inv_p * logdet));
      logas.push_back(la);
    }
    return exp_sum(std::move(coeffs), std::move(logas), spec.dim(), spec.p(),
                   spec.kernel().claims_nonnegative());
  }
  if (is_unit_box(ms) && spec.family().diagonal_basis()) {
    bool coord = spec.measure().dim() == spec.dim();
    for (int j = 0; coord && j < spec.dim(); ++j) {
      const auto& e = spec.family().eigenvalues()[static_cast<size_t>(j)];
      coord = e.kind == EigenvalueForm::Kind::coordinate && e.axis == j && !e.reciprocal;
    }
    if (coord && spec.kernel().form() == KernelSpec::Form::constant) {
      const double c = spec.kernel().constant_value();
      Symbol ces = cesaro(spec.dim(), spec.p());
      if (c == 1.0) return ces;
      return product_symbol(constant(c, spec.dim(), spec.p()), ces);
    }
    if (coord && spec.dim() == 1 && spec.kernel().form() == KernelSpec::Form::ck) {
      return ck(spec.kernel().ck_exponent(), spec.p());
    }
  }
  return quadrature_backed(spec);
}

Symbol Symbol::quadrature_backed(const OperatorSpec& spec, long max_axis_nodes) {
  auto im = std::make_shared<Impl>();
  im->variant = Variant::quadrature;
  im->n = spec.dim();
  im->p = spec.p();
  im->nonneg = spec.kernel().claims_nonnegative();
  im->closed = spec.measure().kind() == MeasureSpace::Kind::discrete;
  im->spec = std::make_shared<OperatorSpec>(spec);
  im->max_axis_nodes = max_axis_nodes;
  im->l1 = norm_bound_lp(spec);
  return Symbol(std::move(im));
}

Symbol Symbol::cesaro(int n, double p) {
  auto im = std::make_shared<Impl>();
  im->variant = Variant::cesaro;
  im->n = n;
  im->p = p;
  im->nonneg = true;
  im->decays = true;
  im->l1 = std::pow(p / (p - 1.0), n);
  return Symbol(std::move(im));
}

Symbol Symbol::ck(double k, double p) {
  if (!(k > 0.0)) throw SpecError("Symbol::ck: k must be positive");
  auto im = std::make_shared<Impl>();
  im->variant = Variant::ck;
  im->n = 1;
  im->p = p;
  im->ck_k = k;
  im->nonneg = true;
  im->decays = true;
  im->l1 = (complex_gamma(k + 1.0) * complex_gamma(1.0 - 1.0 / p) /
            complex_gamma(k + 1.0 - 1.0 / p))
               .real();
  return Symbol(std::move(im));
}

Symbol Symbol::constant(cplx value, int n, double p) {
  auto im = std::make_shared<Impl>();
  im->variant = Variant::constant;
  im->n = n;
  im->p = p;
  im->constant_value = value;
  im->nonneg = value.imag() == 0.0 && value.real() >= 0.0;
  im->l1 = std::abs(value);
  return Symbol(std::move(im));
}

Symbol Symbol::exp_sum(std::vector<cplx> coeffs, std::vector<Point> log_eigenvalues,
                       int n, double p, bool nonneg_kernel) {
  if (coeffs.size() != log_eigenvalues.size() || coeffs.empty()) {
    throw SpecError("Symbol::exp_sum: shape mismatch");
  }
  auto im = std::make_shared<Impl>();
  im->variant = Variant::exp_sum;
  im->n = n;
  im->p = p;
  im->nonneg = nonneg_kernel;
  im->coeffs = std::move(coeffs);
  im->logas = std::move(log_eigenvalues);
  im->l1 = 0.0;
  for (const cplx& c : im->coeffs) im->l1 += std::abs(c);
  return Symbol(std::move(im));
}

cplx Symbol::eval(const Point& s) const {
  if (s.dim != impl_->n) throw SpecError("Symbol: argument dimension mismatch");
  return eval_impl(*impl_, s);
}

int Symbol::dim() const { return impl_->n; }
double Symbol::p() const { return impl_->p; }
Symbol::Variant Symbol::variant() const { return impl_->variant; }
bool Symbol::closed_form() const {
  if (impl_->variant == Variant::composed) {
    const bool a = Symbol(impl_->a).closed_form();
    return impl_->op == Impl::Op::conj ? a : (a && Symbol(impl_->b).closed_form());
  }
  if (impl_->variant == Variant::quadrature) return impl_->closed;
  return true;
}
bool Symbol::nonneg_kernel() const { return impl_->nonneg; }

bool Symbol::known_decay() const {
  switch (impl_->variant) {
    case Variant::cesaro:
    case Variant::ck:
      return true;
    case Variant::composed: {
      const bool a = Symbol(impl_->a).known_decay();
      if (impl_->op == Impl::Op::conj) return a;
      return a || Symbol(impl_->b).known_decay();
    }
    default:
      return impl_->decays;
  }
}

std::optional<double> Symbol::period() const {
  if (impl_->variant == Variant::composed) {
    const auto a = Symbol(impl_->a).period();
    if (impl_->op == Impl::Op::conj) return a;
    const auto b = Symbol(impl_->b).period();
    if (a && b && std::abs(*a - *b) < 1e-12 * *a) return a;
    return std::nullopt;
  }
  if (impl_->variant == Variant::constant) return std::nullopt;
  if (impl_->variant != Variant::exp_sum || impl_->n != 1) return std::nullopt;
  double g = 0.0;
  for (const Point& l : impl_->logas) g = std::max(g, std::abs(l[0]));
  if (g == 0.0) return std::nullopt;
  // the finest generator: all log-eigenvalues must be integer multiples
  double base = g;
  for (const Point& l : impl_->logas) {
    const double v = std::abs(l[0]);
    if (v > 1e-14) base = std::min(base, v);
  }
  for (const Point& l : impl_->logas) {
    const double q = l[0] / base;
    if (std::abs(q - std::round(q)) > 1e-9) return std::nullopt;
  }
  return 2.0 * kPi / base;
}

bool Symbol::separable() const {
  if (impl_->n == 1) return true;
  switch (impl_->variant) {
    case Variant::cesaro:
    case Variant::constant:
      return true;
    case Variant::quadrature:
      return impl_->spec->separable();
    case Variant::composed: {
      const bool a = Symbol(impl_->a).separable();
      if (impl_->op == Impl::Op::conj) return a;
      return a && Symbol(impl_->b).separable();
    }
    default:
      return false;
  }
}

Symbol Symbol::axis_factor(int j) const {
  if (!separable()) throw SpecError("Symbol::axis_factor: symbol does not factor");
  if (impl_->n == 1) return *this;
  switch (impl_->variant) {
    case Variant::cesaro:
      return cesaro(1, impl_->p);
    case Variant::constant:
      return constant(j == 0 ? impl_->constant_value : cplx(1.0), 1, impl_->p);
    case Variant::quadrature:
      return quadrature_backed(impl_->spec->axis_factor(j), impl_->max_axis_nodes);
    case Variant::composed: {
      const Symbol a = Symbol(impl_->a).axis_factor(j);
      if (impl_->op == Impl::Op::conj) return a.conjugated();
      return product_symbol(a, Symbol(impl_->b).axis_factor(j));
    }
    default:
      throw SpecError("Symbol::axis_factor: unsupported variant");
  }
}

const std::vector<cplx>& Symbol::coefficients() const { return impl_->coeffs; }
const std::vector<Point>& Symbol::log_eigenvalues() const { return impl_->logas; }
double Symbol::l1_bound() const { return impl_->l1; }

Symbol Symbol::conjugated() const {
  if (impl_->variant == Variant::exp_sum) {
    std::vector<cplx> coeffs(impl_->coeffs.size());
    std::vector<Point> logas(impl_->logas.size());
    for (size_t k = 0; k < coeffs.size(); ++k) {
      coeffs[k] = std::conj(impl_->coeffs[k]);
      logas[k] = impl_->logas[k];
      for (int j = 0; j < impl_->n; ++j) logas[k][j] = -logas[k][j];
    }
    return exp_sum(std::move(coeffs), std::move(logas), impl_->n, impl_->p,
                   impl_->nonneg);
  }
  if (impl_->variant == Variant::constant) {
    return constant(std::conj(impl_->constant_value), impl_->n, impl_->p);
  }
  auto im = std::make_shared<Impl>();
  im->variant = Variant::composed;
  im->op = Impl::Op::conj;
  im->n = impl_->n;
  im->p = impl_->p;
  im->nonneg = impl_->nonneg;
  im->decays = known_decay();
  im->l1 = impl_->l1;
  im->a = impl_;
  return Symbol(std::move(im));
}

cplx symbol_quadrature(const OperatorSpec& spec, const Point& s, long max_axis_nodes) {
  if (s.dim != spec.dim()) throw SpecError("symbol_quadrature: dimension mismatch");
  return quad_eval(spec, s, max_axis_nodes);
}

cplx symbol_closed_form(const Symbol& sym, const Point& s) {
  if (!sym.closed_form()) {
    throw SpecError("symbol_closed_form: symbol has no closed-form variant");
  }
  return sym.eval(s);
}

Symbol adjoint_symbol(const Symbol& sym) {
  if (sym.p() != 2.0) {
    throw SpecError("adjoint_symbol: the adjoint correspondence holds in L^2 only");
  }
  return sym.conjugated();
}

Symbol product_symbol(const Symbol& a, const Symbol& b) {
  if (a.dim() != b.dim()) throw SpecError("product_symbol: dimension mismatch");
  if (a.p() != 2.0 || b.p() != 2.0) {
    throw SpecError("product_symbol: operator products are modeled at p = 2 only");
  }
  auto im = std::make_shared<Symbol::Impl>();
  im->variant = Symbol::Variant::composed;
  im->op = Impl::Op::product;
  im->n = a.dim();
  im->p = 2.0;
  im->nonneg = a.nonneg_kernel() && b.nonneg_kernel();
  im->l1 = a.l1_bound() * b.l1_bound();
  im->a = a.impl_;
  im->b = b.impl_;
  return Symbol(std::move(im));
}

cplx ck_symbol_product_form(double k, double s, int terms) {
  cplx prod = 1.0;
  for (int l = 1; l <= terms; ++l) {
    const cplx num = static_cast<double>(l) * cplx(k + l - 0.5, -s);
    const cplx den = (k + l) * cplx(l - 0.5, -s);
    prod *= num / den;
  }
  return prod;
}

}  // namespace hausdorff
