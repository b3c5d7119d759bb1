#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hausdorff/builtins.hpp"
#include "hausdorff/errors.hpp"
#include "hausdorff/operator_spec.hpp"
#include "hausdorff/quadrature.hpp"

using namespace hausdorff;

TEST_CASE("gauss rule integrates high-degree polynomials") {
  const Rule1D& r = gauss_legendre(16);
  // integral over [-1,1] of x^30 = 2/31
  double s = 0.0;
  for (size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 30);
  CHECK(std::abs(s - 2.0 / 31.0) < 1e-14);
  double w = 0.0;
  for (double wi : r.weights) w += wi;
  CHECK(std::abs(w - 2.0) < 1e-14);
}

TEST_CASE("graded backbone resolves the endpoint singularity u^{-1/2}") {
  AxisQuadrature ax;
  ax.lo = 0.0;
  ax.hi = 1.0;
  ax.grade_lo = true;
  Rule1D r = ax.rule();
  double s = 0.0;
  for (size_t i = 0; i < r.size(); ++i) s += r.weights[i] / std::sqrt(r.nodes[i]);
  CHECK(std::abs(s - 2.0) < 1e-9);
}

TEST_CASE("validate cesaro: bound 2^n at p=2") {
  for (int n = 1; n <= 3; ++n) {
    ValidationReport rep = validate_spec(builtin_cesaro(n));
    CHECK(rep.valid);
    CHECK(std::abs(rep.l1_bound - std::pow(2.0, n)) < 1e-9);
  }
}

TEST_CASE("validate cesaro at p=4: integral u^{-1/4} = 4/3") {
  ValidationReport rep = validate_spec(builtin_cesaro(1, 4.0));
  CHECK(rep.valid);
  CHECK(std::abs(rep.l1_bound - 4.0 / 3.0) < 1e-10);
}

TEST_CASE("validate geometric discrete spec: bound 4/3, tiny tail") {
  ValidationReport rep = validate_spec(builtin_geometric(40));
  CHECK(rep.valid);
  CHECK(std::abs(rep.l1_bound - 4.0 / 3.0) < 1e-12);
  CHECK(rep.tail_estimate < 1e-12);
}

TEST_CASE("validate rejects a vanishing eigenvalue") {
  // two atoms, a(1) = 0 violates positive definiteness
  auto fam = CommutingFamily::diagonal({EigenvalueForm::tabulated({1.0, 0.0})});
  OperatorSpec spec(MeasureSpace::discrete({Point{0.0}, Point{1.0}}, {1.0, 1.0}),
                    KernelSpec::discrete({cplx(1.0), cplx(1.0)}), std::move(fam), 2.0, 1);
  ValidationReport rep = validate_spec(spec);
  CHECK_FALSE(rep.valid);
  bool found = false;
  for (const auto& issue : rep.issues) found = found || issue.check == "family-positivity";
  CHECK(found);
}

TEST_CASE("validate factorial series: bound e^{1/sqrt 2}") {
  std::vector<cplx> phi;
  double f = 1.0;
  for (int k = 0; k <= 30; ++k) {
    phi.push_back(1.0 / f);
    f *= (k + 1);
  }
  OperatorSpec spec = builtin_discrete(
      std::move(phi), CommutingFamily::diagonal({EigenvalueForm::power(2.0)}));
  ValidationReport rep = validate_spec(spec);
  CHECK(rep.valid);
  CHECK(std::abs(rep.l1_bound - std::exp(1.0 / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("ck kernel forms") {
  CHECK_THROWS_AS(builtin_ck(0.0), SpecError);
  CHECK_THROWS_AS(builtin_ck(-1.0), SpecError);
  OperatorSpec c2 = builtin_ck(2.0);
  // Phi(u) = 2(1-u)
  Point u{0.25};
  CHECK(std::abs(c2.kernel().eval(u, -1) - cplx(1.5)) < 1e-15);
  // k = 1/2 integrable endpoint singularity: bound = k Beta(1/2, k) at p=2
  ValidationReport rep = validate_spec(builtin_ck(0.5));
  CHECK(rep.valid);
  CHECK(std::abs(rep.l1_bound - kPi / 2.0) / (kPi / 2.0) < 1e-8);  // endpoint dust at double resolution
}

TEST_CASE("family commutes and is SPD at random node pairs") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  std::uniform_real_distribution<double> unif(0.1, 3.0);
  const double th = ang(rng);
  const std::vector<double> c = {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
  std::vector<double> e1, e2;
  for (int i = 0; i < 8; ++i) {
    e1.push_back(unif(rng));
    e2.push_back(unif(rng));
  }
  auto fam = CommutingFamily::with_basis(
      2, c, {EigenvalueForm::tabulated(e1), EigenvalueForm::tabulated(e2)});
  for (int trial = 0; trial < 16; ++trial) {
    const long i = rng() % 8, j = rng() % 8;
    Point dummy{0.0};
    auto a = fam.reconstruct(dummy, i);
    auto b = fam.reconstruct(dummy, j);
    Eigen::Map<Eigen::Matrix2d> ma(a.data()), mb(b.data());
    Eigen::Matrix2d comm = ma * mb - mb * ma;
    CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);
    Eigen::LLT<Eigen::Matrix2d> llt(ma.transpose());  // row-major stored; symmetric anyway
    CHECK(llt.info() == Eigen::Success);
  }
}

TEST_CASE("joint diagonalization recovers a common frame") {
  const double th = 0.7;
  Eigen::Matrix2d c;
  c << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  auto make = [&](double l1, double l2) {
    Eigen::Matrix2d d = Eigen::Vector2d(l1, l2).asDiagonal();
    Eigen::Matrix2d a = c * d * c.transpose();
    return std::vector<double>{a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
  };
  std::vector<std::vector<double>> mats = {make(1.0, 2.0), make(3.0, 0.5), make(1.5, 1.5)};
  auto fam = CommutingFamily::from_matrices(2, mats);
  Point dummy{0.0};
  for (size_t k = 0; k < mats.size(); ++k) {
    auto rec = fam.reconstruct(dummy, static_cast<long>(k));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(rec[static_cast<size_t>(i)] - mats[k][static_cast<size_t>(i)]) < 1e-10);
  }

  // a genuinely non-commuting pair is rejected
  std::vector<std::vector<double>> bad = {make(1.0, 2.0), {2.0, 0.3, 0.3, 1.0}};
  CHECK_THROWS_AS(CommutingFamily::from_matrices(2, bad), SpecError);
}

TEST_CASE("with_basis rejects non-orthogonal matrices") {
  std::vector<double> skew = {1.0, 0.1, 0.0, 1.0};
  CHECK_THROWS_AS(CommutingFamily::with_basis(
                      2, skew,
                      {EigenvalueForm::constant(1.0), EigenvalueForm::constant(2.0)}),
                  SpecError);
}

TEST_CASE("spec constructor rejects malformed shapes") {
  CHECK_THROWS_AS(OperatorSpec(MeasureSpace::discrete({Point{0.0}}, {1.0}),
                               KernelSpec::discrete({cplx(1.0), cplx(2.0)}),
                               CommutingFamily::diagonal({EigenvalueForm::constant(1.0)}),
                               2.0, 1),
                  SpecError);
  CHECK_THROWS_AS(OperatorSpec(MeasureSpace::discrete({Point{0.0}}, {1.0}),
                               KernelSpec::discrete({cplx(1.0)}),
                               CommutingFamily::diagonal({EigenvalueForm::constant(1.0)}),
                               0.5, 1),
                  SpecError);
  CHECK_THROWS_AS(MeasureSpace::box({0.0}, {0.0}, {AxisQuadrature{}}), SpecError);
  CHECK_THROWS_AS(MeasureSpace::discrete({Point{0.0}}, {-1.0}), SpecError);
}

TEST_CASE("identity spec validates with bound 1") {
  ValidationReport rep = validate_spec(builtin_identity(1));
  CHECK(rep.valid);
  CHECK(rep.l1_bound == 1.0);
}
