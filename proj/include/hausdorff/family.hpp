#pragma once

#include <span>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

/// One positive eigenvalue function a_j : Omega -> (0, inf). The
/// `reciprocal` flag represents 1/a, so inverted families (adjoints)
/// stay within the same vocabulary.
struct EigenvalueForm {
  enum class Kind { constant, coordinate, power, table };

  Kind kind = Kind::constant;
  double value = 1.0;           // constant
  int axis = 0;                 // coordinate: a(u) = u[axis]
  double base = 1.0;            // power: a(u) = base^{u[0]}
  std::vector<double> table;    // table: a at atom index
  bool reciprocal = false;

  static EigenvalueForm constant(double v) { return {Kind::constant, v, 0, 1.0, {}, false}; }
  static EigenvalueForm coordinate(int ax) { return {Kind::coordinate, 1.0, ax, 1.0, {}, false}; }
  static EigenvalueForm power(double b) { return {Kind::power, 1.0, 0, b, {}, false}; }
  static EigenvalueForm tabulated(std::vector<double> vals) {
    return {Kind::table, 1.0, 0, 1.0, std::move(vals), false};
  }

  double eval(const Point& u, long atom_index) const;
  /// log a(u); exact k*log(base) for the power form.
  double log_eval(const Point& u, long atom_index) const;
  /// The reciprocal form 1/a (used by adjoint specs).
  EigenvalueForm inverted() const;
};

/// Pairwise commuting family of real positive definite matrices, stored in
/// simultaneously diagonalized form A(u) = C diag[a_1(u)..a_n(u)] C^T with
/// C orthogonal. Commutativity holds by construction.
class CommutingFamily {
 public:
  static CommutingFamily diagonal(std::vector<EigenvalueForm> eigenvalues);
  /// C row-major n*n; checked orthogonal within 1e-12 entrywise.
  static CommutingFamily with_basis(int n, std::span<const double> c_row_major,
                                    std::vector<EigenvalueForm> eigenvalues);
  /// Joint diagonalization of raw symmetric matrices (one per atom of a
  /// discrete measure, flat row-major). Fails loudly if the common frame
  /// leaves an off-diagonal residual above `tol`. Produces table forms.
  static CommutingFamily from_matrices(int n,
                                       std::span<const std::vector<double>> mats,
                                       double tol = 1e-8);

  int dim() const { return n_; }
  bool diagonal_basis() const { return identity_; }
  const std::vector<EigenvalueForm>& eigenvalues() const { return eigs_; }
  std::span<const double> basis_row_major() const { return c_; }

  double eigenvalue(int j, const Point& u, long atom_index) const {
    return eigs_[static_cast<size_t>(j)].eval(u, atom_index);
  }
  double log_det(const Point& u, long atom_index) const;
  double det(const Point& u, long atom_index) const;

  /// y = A(u) x.
  void map_point(const Point& u, long atom_index, const Point& x, Point& y) const;

  /// Reconstruct the dense matrix A(u) (row-major), for tests and checks.
  std::vector<double> reconstruct(const Point& u, long atom_index) const;

  /// Family with every eigenvalue function inverted: A(u)^{-1}.
  CommutingFamily inverted() const;

  /// max_ij |C^T C - I|, zero for the identity basis.
  double orthogonality_defect() const;

 private:
  CommutingFamily() = default;

  int n_ = 1;
  bool identity_ = true;
  std::vector<double> c_;  // row-major n*n when !identity_
  std::vector<EigenvalueForm> eigs_;
};

}  // namespace hausdorff
