#include "hausdorff/measure.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

MeasureSpace MeasureSpace::discrete(std::vector<Point> atoms,
                                    std::vector<double> weights) {
  if (atoms.empty() || atoms.size() != weights.size()) {
    throw SpecError("MeasureSpace::discrete: atoms/weights size mismatch");
  }
  const int m = atoms.front().dim;
  if (m < 1 || m > kMaxDim) throw SpecError("MeasureSpace::discrete: bad atom dimension");
  for (const Point& a : atoms) {
    if (a.dim != m) throw SpecError("MeasureSpace::discrete: ragged atom dimensions");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw SpecError("MeasureSpace::discrete: weights must be finite and nonnegative");
    }
  }
  MeasureSpace ms;
  ms.kind_ = Kind::discrete;
  ms.m_ = m;
  ms.atoms_ = std::move(atoms);
  ms.weights_ = std::move(weights);
  return ms;
}

MeasureSpace MeasureSpace::box(std::vector<double> lo, std::vector<double> hi,
                               std::vector<AxisQuadrature> rules) {
  const size_t m = lo.size();
  if (m == 0 || m > kMaxDim || hi.size() != m || rules.size() != m) {
    throw SpecError("MeasureSpace::box: inconsistent axis counts");
  }
  for (size_t i = 0; i < m; ++i) {
    if (!(lo[i] < hi[i])) throw SpecError("MeasureSpace::box: degenerate box (lo >= hi)");
    rules[i].lo = lo[i];
    rules[i].hi = hi[i];
    if (rules[i].gauss_order < 2) {
      throw SpecError("MeasureSpace::box: need at least 2 nodes per axis");
    }
  }
  MeasureSpace ms;
  ms.kind_ = Kind::box;
  ms.m_ = static_cast<int>(m);
  ms.lo_ = std::move(lo);
  ms.hi_ = std::move(hi);
  ms.rules_ = std::move(rules);
  return ms;
}

const std::vector<Rule1D>& MeasureSpace::backbone() const {
  if (backbone_.empty() && kind_ == Kind::box) {
    backbone_.reserve(rules_.size());
    for (const auto& r : rules_) backbone_.push_back(r.rule());
  }
  return backbone_;
}

}  // namespace hausdorff
