#include "hausdorff/gamma.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "hausdorff/errors.hpp"

using namespace hausdorff;

namespace {
double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("gamma at classical points") {
  CHECK(rel_err(complex_gamma(1.0), 1.0) < 1e-14);
  CHECK(rel_err(complex_gamma(0.5), std::sqrt(kPi)) < 1e-14);
  CHECK(rel_err(complex_gamma(1.5), 0.5 * std::sqrt(kPi)) < 1e-14);
  // integer factorials
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    CHECK(rel_err(complex_gamma(static_cast<double>(n)), fact) < 1e-13);
    fact *= n;
  }
  // reflection side
  CHECK(rel_err(complex_gamma(-0.5), -2.0 * std::sqrt(kPi)) < 1e-13);
  CHECK(rel_err(complex_gamma(-2.5), -8.0 / 15.0 * std::sqrt(kPi)) < 1e-13);
}

TEST_CASE("modulus identity on the critical line: |Gamma(1/2+it)|^2 = pi/cosh(pi t)") {
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
    const cplx g = complex_gamma(cplx(0.5, t));
    const double want = kPi / std::cosh(kPi * t);
    CHECK(std::abs(std::norm(g) - want) <= 1e-10 * want);
  }
  // the derived spec value at t = 1
  CHECK(std::abs(std::norm(complex_gamma(cplx(0.5, 1.0))) - kPi / std::cosh(kPi)) < 1e-10);
}

TEST_CASE("|Gamma(1+it)|^2 = pi t / sinh(pi t)") {
  for (double t : {0.25, 1.0, 3.0, 12.0, 40.0}) {
    const cplx g = complex_gamma(cplx(1.0, t));
    const double want = kPi * t / std::sinh(kPi * t);
    CHECK(std::abs(std::norm(g) - want) <= 1e-11 * want);
  }
}

TEST_CASE("recurrence Gamma(z+1) = z Gamma(z) across the working strip") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(-9.5, 49.0);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5) continue;  // stay off the poles
    const cplx lhs = complex_gamma(z + 1.0);
    const cplx rhs = z * complex_gamma(z);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("duplication formula") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(0.5, 20.0);
  std::uniform_real_distribution<double> im(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    cplx z(re(rng), im(rng));
    const cplx lhs = complex_gamma(z) * complex_gamma(z + 0.5);
    const cplx rhs = std::pow(cplx(2.0), 1.0 - 2.0 * z) * std::sqrt(kPi) *
                     complex_gamma(2.0 * z);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("poles are rejected") {
  CHECK_THROWS_AS(complex_gamma(0.0), SpecError);
  CHECK_THROWS_AS(complex_gamma(-1.0), SpecError);
  CHECK_THROWS_AS(complex_gamma(-7.0), SpecError);
}

TEST_CASE("log_abs_gamma agrees with the direct value") {
  for (double t : {0.0, 1.0, 10.0}) {
    const cplx z(3.25, t);
    CHECK(std::abs(log_abs_gamma(z) - std::log(std::abs(complex_gamma(z)))) < 1e-12);
  }
}
