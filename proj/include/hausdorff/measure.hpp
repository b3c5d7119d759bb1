#pragma once

#include <vector>

#include "hausdorff/quadrature.hpp"
#include "hausdorff/types.hpp"

namespace hausdorff {

/// The measure space (Omega, mu): either a finite set of weighted atoms in
/// R^m or a box [lo, hi]^m with a per-axis composite Gauss rule.
class MeasureSpace {
 public:
  enum class Kind { discrete, box };

  static MeasureSpace discrete(std::vector<Point> atoms, std::vector<double> weights);
  static MeasureSpace box(std::vector<double> lo, std::vector<double> hi,
                          std::vector<AxisQuadrature> rules);

  Kind kind() const { return kind_; }
  int dim() const { return m_; }

  // discrete accessors
  size_t atom_count() const { return atoms_.size(); }
  const Point& atom(size_t i) const { return atoms_[i]; }
  double weight(size_t i) const { return weights_[i]; }
  const std::vector<Point>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }

  // box accessors
  const std::vector<AxisQuadrature>& axes() const { return rules_; }
  const AxisQuadrature& axis(int i) const { return rules_[static_cast<size_t>(i)]; }
  double lower(int i) const { return lo_[static_cast<size_t>(i)]; }
  double upper(int i) const { return hi_[static_cast<size_t>(i)]; }

  /// Backbone rules materialized once, cached.
  const std::vector<Rule1D>& backbone() const;

 private:
  MeasureSpace() = default;

  Kind kind_ = Kind::discrete;
  int m_ = 1;
  std::vector<Point> atoms_;
  std::vector<double> weights_;
  std::vector<double> lo_, hi_;
  std::vector<AxisQuadrature> rules_;
  mutable std::vector<Rule1D> backbone_;
};

/// Visit every quadrature node of the measure with the given per-axis box
/// rules (ignored for discrete measures): fn(u, w, node_index). The node
/// index is the atom index or the flat row-major backbone index; it is -1
/// for box rules that are not the backbone (tabulated kernels cannot be
/// evaluated on refined rules).
template <typename Fn>
void for_each_node(const MeasureSpace& ms, const std::vector<Rule1D>* box_rules,
                   bool rules_are_backbone, Fn&& fn) {
  if (ms.kind() == MeasureSpace::Kind::discrete) {
    for (size_t i = 0; i < ms.atom_count(); ++i) {
      fn(ms.atom(i), ms.weight(i), static_cast<long>(i));
    }
    return;
  }
  const std::vector<Rule1D>& rules = box_rules ? *box_rules : ms.backbone();
  const bool indexable = box_rules == nullptr || rules_are_backbone;
  const int m = ms.dim();
  size_t idx[kMaxDim] = {0, 0, 0, 0};
  Point u(m);
  for (;;) {
    double w = 1.0;
    long flat = 0;
    for (int a = 0; a < m; ++a) {
      const Rule1D& r = rules[static_cast<size_t>(a)];
      u[a] = r.nodes[idx[a]];
      w *= r.weights[idx[a]];
      flat = flat * static_cast<long>(r.size()) + static_cast<long>(idx[a]);
    }
    fn(u, w, indexable ? flat : -1);
    int a = m - 1;
    for (; a >= 0; --a) {
      if (++idx[a] < rules[static_cast<size_t>(a)].size()) break;
      idx[a] = 0;
    }
    if (a < 0) break;
  }
}

}  // namespace hausdorff
