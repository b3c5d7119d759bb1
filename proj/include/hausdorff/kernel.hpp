#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

/// Kernel of a Hausdorff operator: an evaluator over the measure space,
/// either one of the closed forms the JSON schema can name or a derived
/// evaluator (adjoints, inverses). Values may be complex; the
/// nonnegativity flag is a claim that validate_spec checks at the nodes.
class KernelSpec {
 public:
  enum class Form { constant, ck, discrete, table, derived };

  static KernelSpec constant(double value);
  /// (C,k) mean kernel k(1-u)^{k-1} on [0,1]; requires k > 0.
  static KernelSpec ck(double k);
  /// Values indexed by atom of a discrete measure.
  static KernelSpec discrete(std::vector<cplx> values);
  /// Values tabulated at the backbone quadrature nodes of a box measure
  /// (flat row-major index). Tabulated kernels pin the quadrature rule:
  /// no splits, no oscillatory refinement.
  static KernelSpec table(std::vector<cplx> values, bool claims_nonnegative);
  static KernelSpec derived(std::function<cplx(const Point&, long)> eval,
                            bool claims_nonnegative, std::string label);

  /// Evaluate at point u; `node_index` identifies the quadrature node
  /// (atom index for discrete measures, flat backbone index for box
  /// measures, -1 when not applicable).
  cplx eval(const Point& u, long node_index) const;

  Form form() const { return form_; }
  bool claims_nonnegative() const { return nonneg_; }
  double ck_exponent() const { return ck_k_; }
  double constant_value() const { return const_value_; }
  const std::vector<cplx>& values() const { return values_; }
  const std::string& label() const { return label_; }

 private:
  KernelSpec() = default;

  Form form_ = Form::constant;
  bool nonneg_ = false;
  double const_value_ = 1.0;
  double ck_k_ = 1.0;
  std::vector<cplx> values_;
  std::function<cplx(const Point&, long)> eval_;
  std::string label_;
};

}  // namespace hausdorff
