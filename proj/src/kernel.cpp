#include "hausdorff/kernel.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

KernelSpec KernelSpec::constant(double value) {
  KernelSpec k;
  k.form_ = Form::constant;
  k.const_value_ = value;
  k.nonneg_ = value >= 0.0;
  k.label_ = "constant";
  return k;
}

KernelSpec KernelSpec::ck(double kexp) {
  if (!(kexp > 0.0)) throw SpecError("KernelSpec::ck: k must be positive");
  KernelSpec k;
  k.form_ = Form::ck;
  k.ck_k_ = kexp;
  k.nonneg_ = true;
  k.label_ = "ck";
  return k;
}

KernelSpec KernelSpec::discrete(std::vector<cplx> values) {
  KernelSpec k;
  k.form_ = Form::discrete;
  k.nonneg_ = true;
  for (cplx v : values) {
    if (v.imag() != 0.0 || v.real() < 0.0) k.nonneg_ = false;
  }
  k.values_ = std::move(values);
  k.label_ = "discrete";
  return k;
}

KernelSpec KernelSpec::table(std::vector<cplx> values, bool claims_nonnegative) {
  KernelSpec k;
  k.form_ = Form::table;
  k.values_ = std::move(values);
  k.nonneg_ = claims_nonnegative;
  k.label_ = "table";
  return k;
}

KernelSpec KernelSpec::derived(std::function<cplx(const Point&, long)> eval,
                               bool claims_nonnegative, std::string label) {
  KernelSpec k;
  k.form_ = Form::derived;
  k.eval_ = std::move(eval);
  k.nonneg_ = claims_nonnegative;
  k.label_ = std::move(label);
  return k;
}

cplx KernelSpec::eval(const Point& u, long node_index) const {
  switch (form_) {
    case Form::constant:
      return const_value_;
    case Form::ck: {
      const double w = 1.0 - u[0];
      // endpoint never coincides with a Gauss node; guard anyway
      if (w <= 0.0) return ck_k_ == 1.0 ? cplx(1.0) : cplx(0.0);
      return ck_k_ * std::pow(w, ck_k_ - 1.0);
    }
    case Form::discrete:
    case Form::table: {
      if (node_index < 0 || static_cast<size_t>(node_index) >= values_.size()) {
        throw SpecError("KernelSpec: node index out of range for tabulated kernel");
      }
      return values_[static_cast<size_t>(node_index)];
    }
    case Form::derived:
      return eval_(u, node_index);
  }
  return 0.0;
}

}  // namespace hausdorff
