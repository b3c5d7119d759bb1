#pragma once

#include <memory>
#include <optional>

#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

/// The symbol phi(s) = integral Phi(u) (det A(u))^{-1/p} a(u)^{-is} dmu(u),
/// an evaluable bounded continuous function on R^n. Closed-form variants
/// exist for the Cesaro and (C,k) operators and for every discrete
/// measure (finite exponential sum); anything else evaluates by
/// oscillation-refined quadrature. Evaluators are immutable and safe to
/// share across threads.
class Symbol {
 public:
  enum class Variant { cesaro, ck, exp_sum, quadrature, constant, composed };

  /// Dispatch on the spec: discrete -> exponential sum; [0,1]^n box with
  /// the Cesaro/(C,k) structure -> gamma-function closed forms; otherwise
  /// quadrature-backed.
  static Symbol for_spec(const OperatorSpec& spec);
  /// Always quadrature (used for closed-form cross-validation).
  static Symbol quadrature_backed(const OperatorSpec& spec,
                                  long max_axis_nodes = 32768);

  static Symbol cesaro(int n, double p = 2.0);
  static Symbol ck(double k, double p = 2.0);
  static Symbol constant(cplx value, int n = 1, double p = 2.0);
  /// phi(s) = sum_k c_k exp(-i s . loga_k).
  static Symbol exp_sum(std::vector<cplx> coeffs, std::vector<Point> log_eigenvalues,
                        int n, double p, bool nonneg_kernel);

  cplx eval(const Point& s) const;
  cplx operator()(const Point& s) const { return eval(s); }

  int dim() const;
  double p() const;
  Variant variant() const;
  /// True when eval uses a closed form rather than quadrature.
  bool closed_form() const;
  /// The kernel that built this symbol is nonnegative: sup|phi| = phi(0).
  bool nonneg_kernel() const;
  /// |phi(s)| -> 0 as |s| -> inf, known analytically (cesaro, ck).
  bool known_decay() const;
  /// phi(s + period) = phi(s) exactly (single-generator discrete, n = 1).
  std::optional<double> period() const;

  /// phi factors across axes: phi(s) = prod_j factor_j(s_j).
  bool separable() const;
  Symbol axis_factor(int j) const;

  /// exp_sum coefficient access (empty otherwise).
  const std::vector<cplx>& coefficients() const;
  const std::vector<Point>& log_eigenvalues() const;

  /// upper bound integral |Phi| (det A)^{-1/p} dmu carried from the spec,
  /// 0 when unknown.
  double l1_bound() const;

  Symbol conjugated() const;

  struct Impl;  // defined in symbol.cpp

 private:
  explicit Symbol(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend Symbol product_symbol(const Symbol& a, const Symbol& b);
  std::shared_ptr<const Impl> impl_;
};

/// Definition-2 integral evaluated by the spec's quadrature with
/// oscillation-aware panel refinement (at least 16 nodes per period of
/// a(u)^{-is}); throws OscillationBudgetError past the node budget.
cplx symbol_quadrature(const OperatorSpec& spec, const Point& s,
                       long max_axis_nodes = 32768);

/// Evaluate a closed-form symbol; throws SpecError on quadrature-backed
/// variants.
cplx symbol_closed_form(const Symbol& sym, const Point& s);

/// Corollary: the symbol of the adjoint is the conjugate (p = 2 only).
Symbol adjoint_symbol(const Symbol& sym);

/// Pointwise product (p = 2, equal dimensions); the symbol of the
/// operator product.
Symbol product_symbol(const Symbol& a, const Symbol& b);

/// Truncated infinite-product form of the (C,k) symbol at p = 2
///   prod_{l=1..L} l (k+l-1/2-is) / ((k+l)(l-1/2-is)),
/// an independent cross-check with O(1/L) tail.
cplx ck_symbol_product_form(double k, double s, int terms);

}  // namespace hausdorff
