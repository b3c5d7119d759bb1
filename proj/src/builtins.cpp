#include "hausdorff/builtins.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

OperatorSpec builtin_cesaro(int n, double p) {
  std::vector<double> lo(static_cast<size_t>(n), 0.0);
  std::vector<double> hi(static_cast<size_t>(n), 1.0);
  std::vector<AxisQuadrature> rules(static_cast<size_t>(n));
  std::vector<EigenvalueForm> eigs;
  for (int j = 0; j < n; ++j) {
    rules[static_cast<size_t>(j)].grade_lo = true;  // resolves u^{-1/p} and u^{-is}
    eigs.push_back(EigenvalueForm::coordinate(j));
  }
  return OperatorSpec(MeasureSpace::box(std::move(lo), std::move(hi), std::move(rules)),
                      KernelSpec::constant(1.0), CommutingFamily::diagonal(std::move(eigs)),
                      p, n);
}

OperatorSpec builtin_ck(double k, double p) {
  if (!(k > 0.0)) throw SpecError("builtin_ck: k must be positive");
  AxisQuadrature rule;
  rule.grade_lo = true;
  rule.grade_hi = k < 1.0;
  return OperatorSpec(MeasureSpace::box({0.0}, {1.0}, {rule}), KernelSpec::ck(k),
                      CommutingFamily::diagonal({EigenvalueForm::coordinate(0)}), p, 1);
}

OperatorSpec builtin_discrete(std::vector<cplx> kernel_values, CommutingFamily family,
                              double p) {
  const size_t count = kernel_values.size();
  if (count == 0) throw SpecError("builtin_discrete: empty kernel");
  std::vector<Point> atoms;
  atoms.reserve(count);
  for (size_t k = 0; k < count; ++k) atoms.push_back(Point{static_cast<double>(k)});
  std::vector<double> weights(count, 1.0);
  const int n = family.dim();
  return OperatorSpec(MeasureSpace::discrete(std::move(atoms), std::move(weights)),
                      KernelSpec::discrete(std::move(kernel_values)), std::move(family),
                      p, n);
}

OperatorSpec builtin_identity(int n, double p) {
  std::vector<EigenvalueForm> eigs(static_cast<size_t>(n), EigenvalueForm::constant(1.0));
  return OperatorSpec(MeasureSpace::discrete({Point{0.0}}, {1.0}),
                      KernelSpec::discrete({cplx(1.0)}),
                      CommutingFamily::diagonal(std::move(eigs)), p, n);
}

OperatorSpec builtin_geometric(int truncation, double p) {
  if (truncation < 1) throw SpecError("builtin_geometric: truncation < 1");
  std::vector<cplx> phi(static_cast<size_t>(truncation) + 1);
  double v = 1.0;
  for (auto& x : phi) {
    x = v;
    v *= 0.5;
  }
  return builtin_discrete(std::move(phi),
                          CommutingFamily::diagonal({EigenvalueForm::power(4.0)}), p);
}

OperatorSpec builtin_symmetrized(double lambda, std::vector<double> coeffs, double p) {
  if (!(lambda > 0.0)) throw SpecError("builtin_symmetrized: lambda must be positive");
  if (coeffs.empty()) throw SpecError("builtin_symmetrized: no coefficients");
  const int big_k = static_cast<int>(coeffs.size()) - 1;
  std::vector<Point> atoms;
  std::vector<double> weights;
  std::vector<cplx> phi;
  for (int k = -big_k; k <= big_k; ++k) {
    atoms.push_back(Point{static_cast<double>(k)});
    weights.push_back(1.0);
    phi.push_back(coeffs[static_cast<size_t>(std::abs(k))] *
                  std::pow(lambda, 0.5 * k));
  }
  return OperatorSpec(MeasureSpace::discrete(std::move(atoms), std::move(weights)),
                      KernelSpec::discrete(std::move(phi)),
                      CommutingFamily::diagonal({EigenvalueForm::power(lambda)}), p, 1);
}

}  // namespace hausdorff
