#include "hausdorff/family.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "hausdorff/errors.hpp"

namespace hausdorff {

double EigenvalueForm::eval(const Point& u, long atom_index) const {
  double a = 1.0;
  switch (kind) {
    case Kind::constant:
      a = value;
      break;
    case Kind::coordinate:
      a = u[axis];
      break;
    case Kind::power:
      a = std::pow(base, u[0]);
      break;
    case Kind::table:
      if (atom_index < 0 || static_cast<size_t>(atom_index) >= table.size()) {
        throw SpecError("EigenvalueForm: atom index out of range");
      }
      a = table[static_cast<size_t>(atom_index)];
      break;
  }
  return reciprocal ? 1.0 / a : a;
}

double EigenvalueForm::log_eval(const Point& u, long atom_index) const {
  double la = 0.0;
  switch (kind) {
    case Kind::constant:
      la = std::log(value);
      break;
    case Kind::coordinate:
      la = std::log(u[axis]);
      break;
    case Kind::power:
      la = u[0] * std::log(base);
      break;
    case Kind::table:
      if (atom_index < 0 || static_cast<size_t>(atom_index) >= table.size()) {
        throw SpecError("EigenvalueForm: atom index out of range");
      }
      la = std::log(table[static_cast<size_t>(atom_index)]);
      break;
  }
  return reciprocal ? -la : la;
}

EigenvalueForm EigenvalueForm::inverted() const {
  EigenvalueForm inv = *this;
  inv.reciprocal = !reciprocal;
  return inv;
}

CommutingFamily CommutingFamily::diagonal(std::vector<EigenvalueForm> eigenvalues) {
  if (eigenvalues.empty() || eigenvalues.size() > kMaxDim) {
    throw SpecError("CommutingFamily: dimension out of range");
  }
  CommutingFamily f;
  f.n_ = static_cast<int>(eigenvalues.size());
  f.identity_ = true;
  f.eigs_ = std::move(eigenvalues);
  return f;
}

CommutingFamily CommutingFamily::with_basis(int n,
                                            std::span<const double> c_row_major,
                                            std::vector<EigenvalueForm> eigenvalues) {
  if (n < 1 || n > kMaxDim || eigenvalues.size() != static_cast<size_t>(n)) {
    throw SpecError("CommutingFamily: inconsistent dimensions");
  }
  if (c_row_major.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw SpecError("CommutingFamily: basis matrix has wrong shape");
  }
  CommutingFamily f;
  f.n_ = n;
  f.identity_ = false;
  f.c_.assign(c_row_major.begin(), c_row_major.end());
  f.eigs_ = std::move(eigenvalues);
  if (f.orthogonality_defect() > 1e-12) {
    throw SpecError("CommutingFamily: basis is not orthogonal (tol 1e-12)");
  }
  return f;
}

CommutingFamily CommutingFamily::from_matrices(
    int n, std::span<const std::vector<double>> mats, double tol) {
  if (mats.empty()) throw SpecError("from_matrices: no matrices");
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<Eigen::MatrixXd> as;
  as.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.size() != nn) throw SpecError("from_matrices: wrong matrix shape");
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = m[static_cast<size_t>(i) * n + j];
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol) {
      throw SpecError("from_matrices: matrix not symmetric");
    }
    as.push_back(std::move(a));
  }

  // Diagonalize a generic positive combination; a shared frame for the
  // family diagonalizes it, and genericity separates clustered spectra.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : as) mix += unif(rng) * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mix);
  Eigen::MatrixXd c = es.eigenvectors();

  double scale = 0.0;
  for (const auto& a : as) scale = std::max(scale, a.cwiseAbs().maxCoeff());
  std::vector<EigenvalueForm> eigs(static_cast<size_t>(n));
  std::vector<std::vector<double>> tables(static_cast<size_t>(n));
  for (const auto& a : as) {
    Eigen::MatrixXd d = c.transpose() * a * c;
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off = std::max(off, std::abs(d(i, j)));
    if (off > tol * std::max(1.0, scale)) {
      throw SpecError("from_matrices: family is not simultaneously diagonalizable "
                      "(off-diagonal residual above tolerance)");
    }
    for (int j = 0; j < n; ++j) tables[static_cast<size_t>(j)].push_back(d(j, j));
  }
  for (int j = 0; j < n; ++j) {
    eigs[static_cast<size_t>(j)] = EigenvalueForm::tabulated(std::move(tables[static_cast<size_t>(j)]));
  }
  std::vector<double> c_flat(nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c_flat[static_cast<size_t>(i) * n + j] = c(i, j);
  CommutingFamily f;
  f.n_ = n;
  f.identity_ = false;
  f.c_ = std::move(c_flat);
  f.eigs_ = std::move(eigs);
  return f;
}

double CommutingFamily::log_det(const Point& u, long atom_index) const {
  double s = 0.0;
  for (const auto& e : eigs_) s += e.log_eval(u, atom_index);
  return s;
}

double CommutingFamily::det(const Point& u, long atom_index) const {
  double p = 1.0;
  for (const auto& e : eigs_) p *= e.eval(u, atom_index);
  return p;
}

void CommutingFamily::map_point(const Point& u, long atom_index, const Point& x,
                                Point& y) const {
  y.dim = n_;
  if (identity_) {
    for (int j = 0; j < n_; ++j) y[j] = eigs_[static_cast<size_t>(j)].eval(u, atom_index) * x[j];
    return;
  }
  // y = C diag(a) C^T x
  double t[kMaxDim] = {0, 0, 0, 0};
  for (int j = 0; j < n_; ++j) {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += c_[static_cast<size_t>(i) * n_ + j] * x[i];
    t[j] = eigs_[static_cast<size_t>(j)].eval(u, atom_index) * s;
  }
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += c_[static_cast<size_t>(i) * n_ + j] * t[j];
    y[i] = s;
  }
}

std::vector<double> CommutingFamily::reconstruct(const Point& u, long atom_index) const {
  std::vector<double> m(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      double s = 0.0;
      for (int k = 0; k < n_; ++k) {
        const double cik = identity_ ? (i == k ? 1.0 : 0.0) : c_[static_cast<size_t>(i) * n_ + k];
        const double cjk = identity_ ? (j == k ? 1.0 : 0.0) : c_[static_cast<size_t>(j) * n_ + k];
        s += cik * eigs_[static_cast<size_t>(k)].eval(u, atom_index) * cjk;
      }
      m[static_cast<size_t>(i) * n_ + j] = s;
    }
  }
  return m;
}

CommutingFamily CommutingFamily::inverted() const {
  CommutingFamily f = *this;
  for (auto& e : f.eigs_) e = e.inverted();
  return f;
}

double CommutingFamily::orthogonality_defect() const {
  if (identity_) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      double s = 0.0;
      for (int k = 0; k < n_; ++k) {
        s += c_[static_cast<size_t>(k) * n_ + i] * c_[static_cast<size_t>(k) * n_ + j];
      }
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace hausdorff
