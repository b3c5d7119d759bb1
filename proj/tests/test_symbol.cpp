#include "hausdorff/symbol.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "hausdorff/builtins.hpp"
#include "hausdorff/checks.hpp"
#include "hausdorff/errors.hpp"
#include "hausdorff/gamma.hpp"

using namespace hausdorff;

TEST_CASE("cesaro symbol closed form and quadrature") {
  OperatorSpec spec = builtin_cesaro(1);
  Symbol sym = Symbol::for_spec(spec);
  CHECK(sym.closed_form());
  CHECK(sym.nonneg_kernel());
  // phi(0) = 2
  CHECK(std::abs(sym.eval(Point{0.0}) - cplx(2.0)) < 1e-14);
  // phi(1/2) = 1/(1/2 - i/2) = 1 + i
  CHECK(std::abs(sym.eval(Point{0.5}) - cplx(1.0, 1.0)) < 1e-14);
  CHECK(std::abs(symbol_quadrature(spec, Point{0.0}) - cplx(2.0)) < 1e-9);
  CHECK(std::abs(symbol_quadrature(spec, Point{0.5}) - cplx(1.0, 1.0)) < 1e-10);
}

TEST_CASE("discrete geometric symbol: phi(s) = F(exp(-is log4)), F = 1/(1-z/4)") {
  OperatorSpec spec = builtin_geometric(40);
  Symbol sym = Symbol::for_spec(spec);
  CHECK(std::abs(sym.eval(Point{0.0}) - cplx(4.0 / 3.0)) < 1e-12);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> sdist(-20.0, 20.0);
  for (int i = 0; i < 32; ++i) {
    const double s = sdist(rng);
    const cplx z = std::polar(1.0, -s * std::log(4.0));
    const cplx want = 1.0 / (1.0 - z / 4.0);
    CHECK(std::abs(sym.eval(Point{s}) - want) < 1e-12);
    CHECK(std::abs(symbol_quadrature(spec, Point{s}) - want) < 1e-12);
  }
}

TEST_CASE("ck symbol: gamma ratio values") {
  // k=1, s=0: Gamma(2)Gamma(1/2)/Gamma(3/2) = 2
  Symbol s1 = Symbol::ck(1.0);
  CHECK(std::abs(s1.eval(Point{0.0}) - cplx(2.0)) < 1e-13);
  // k=2, s=0: 8/3 = 2! 2^2 / (1*3)
  Symbol s2 = Symbol::ck(2.0);
  CHECK(std::abs(s2.eval(Point{0.0}) - cplx(8.0 / 3.0)) < 1e-13);
  // k=3: 3! 2^3 / (1*3*5) = 16/5
  Symbol s3 = Symbol::ck(3.0);
  CHECK(std::abs(s3.eval(Point{0.0}) - cplx(16.0 / 5.0)) < 1e-13);
  // k=1/2: sqrt(pi) Gamma(3/2) / Gamma(1) = pi/2
  Symbol sh = Symbol::ck(0.5);
  CHECK(std::abs(sh.eval(Point{0.0}) - cplx(kPi / 2.0)) < 1e-13);
}

TEST_CASE("closed form vs quadrature on [-20,20]") {
  SUBCASE("cesaro n=1") {
    OperatorSpec spec = builtin_cesaro(1);
    Symbol sym = Symbol::for_spec(spec);
    for (int i = 0; i <= 80; ++i) {
      const double s = -20.0 + 0.5 * i;
      CHECK(std::abs(sym.eval(Point{s}) - symbol_quadrature(spec, Point{s})) < 1e-7);
    }
  }
  SUBCASE("cesaro n=2") {
    OperatorSpec spec = builtin_cesaro(2);
    Symbol sym = Symbol::for_spec(spec);
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        Point s{-20.0 + 2.0 * i, -20.0 + 2.0 * j};
        CHECK(std::abs(sym.eval(s) - symbol_quadrature(spec, s)) < 1e-7);
      }
    }
  }
  SUBCASE("ck k in {0.5, 1, 2, 3}") {
    for (double k : {0.5, 1.0, 2.0, 3.0}) {
      OperatorSpec spec = builtin_ck(k);
      Symbol sym = Symbol::for_spec(spec);
      for (int i = 0; i <= 40; ++i) {
        const double s = -20.0 + i;
        CHECK(std::abs(sym.eval(Point{s}) - symbol_quadrature(spec, Point{s})) < 1e-7);
      }
    }
  }
}

TEST_CASE("boundedness: |phi| <= l1 bound on a dense grid") {
  for (const OperatorSpec& spec :
       {builtin_cesaro(1), builtin_ck(0.5), builtin_ck(2.0), builtin_geometric(40)}) {
    Symbol sym = Symbol::for_spec(spec);
    // the quadrature bound itself carries ~1e-8 relative endpoint dust for
    // k < 1 (double resolution near u = 1); the slack absorbs it
    const double bound = norm_bound_lp(spec) * (1.0 + 2e-8);
    for (int i = 0; i <= 400; ++i) {
      const double s = -40.0 + 0.2 * i;
      CHECK(std::abs(sym.eval(Point{s})) <= bound + 1e-9);
    }
  }
}

TEST_CASE("hermitian symmetry for real kernels: phi(-s) = conj(phi(s))") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> sdist(0.0, 30.0);
  for (const OperatorSpec& spec :
       {builtin_cesaro(1), builtin_ck(1.5), builtin_geometric(30)}) {
    Symbol sym = Symbol::for_spec(spec);
    for (int i = 0; i < 24; ++i) {
      const double s = sdist(rng);
      CHECK(std::abs(sym.eval(Point{-s}) - std::conj(sym.eval(Point{s}))) < 1e-12);
    }
  }
}

TEST_CASE("single-generator discrete symbols are periodic") {
  Symbol sym = Symbol::for_spec(builtin_geometric(40));
  auto period = sym.period();
  REQUIRE(period.has_value());
  CHECK(std::abs(*period - 2.0 * kPi / std::log(4.0)) < 1e-12);
  for (double s : {-3.0, 0.25, 7.0}) {
    CHECK(std::abs(sym.eval(Point{s + *period}) - sym.eval(Point{s})) < 1e-12);
  }
}

TEST_CASE("adjoint symbol is the conjugate; involution restores") {
  Symbol ces = Symbol::cesaro(1);
  Symbol adj = adjoint_symbol(ces);
  for (double s : {-2.0, 0.0, 1.0, 11.5}) {
    const cplx want = 1.0 / cplx(0.5, s);  // conj of 1/(1/2 - is)
    CHECK(std::abs(adj.eval(Point{s}) - want) < 1e-14);
    CHECK(std::abs(adjoint_symbol(adj).eval(Point{s}) - ces.eval(Point{s})) < 1e-14);
  }
  // cross-check against the quadrature symbol of the adjoint spec
  OperatorSpec aspec = adjoint_spec(builtin_cesaro(1));
  for (double s : {-1.0, 0.5, 4.0}) {
    CHECK(std::abs(symbol_quadrature(aspec, Point{s}) - adj.eval(Point{s})) < 1e-9);
  }
  // p != 2 rejected
  CHECK_THROWS_AS(adjoint_symbol(Symbol::cesaro(1, 3.0)), SpecError);
}

TEST_CASE("symmetrized discrete spec has a real symbol") {
  OperatorSpec spec = builtin_symmetrized(3.0, {1.0, 0.5, 0.25});
  Symbol sym = Symbol::for_spec(spec);
  for (double s : {-5.0, -1.0, 0.0, 2.0, 17.0}) {
    CHECK(std::abs(sym.eval(Point{s}).imag()) < 1e-14);
  }
  Symbol adj = adjoint_symbol(sym);
  for (double s : {-2.0, 0.7}) {
    CHECK(std::abs(adj.eval(Point{s}) - sym.eval(Point{s})) < 1e-13);
  }
}

TEST_CASE("product symbol: identity factor and reciprocal partner") {
  Symbol ces = Symbol::cesaro(1);
  Symbol one = Symbol::constant(1.0);
  Symbol prod = product_symbol(ces, one);
  for (double s : {-1.0, 0.0, 3.0}) {
    CHECK(std::abs(prod.eval(Point{s}) - ces.eval(Point{s})) < 1e-15);
  }
  // reciprocal partner: (1/2 - is) as an explicit evaluator
  OperatorSpec geo = builtin_geometric(40);
  Symbol phi = Symbol::for_spec(geo);
  // G = 1/F = 1 - z/4 as a two-term exponential sum
  Symbol psi = Symbol::exp_sum({cplx(1.0), cplx(-0.25)},
                               {Point{0.0}, Point{std::log(4.0)}}, 1, 2.0, false);
  Symbol unit = product_symbol(phi, psi);
  for (double s : {-4.0, 0.0, 0.9, 12.0}) {
    CHECK(std::abs(unit.eval(Point{s}) - cplx(1.0)) < 1e-12);
  }
  CHECK_THROWS_AS(product_symbol(Symbol::cesaro(1), Symbol::cesaro(2)), SpecError);
}

TEST_CASE("gamma-ratio recurrence phi_k / phi_{k+1} = (k+1/2-is)/(k+1)") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> sdist(-15.0, 15.0);
  for (double k : {0.5, 1.0, 2.0, 3.0, 4.5}) {
    Symbol a = Symbol::ck(k), b = Symbol::ck(k + 1.0);
    for (int i = 0; i < 16; ++i) {
      const double s = sdist(rng);
      const cplx lhs = a.eval(Point{s}) / b.eval(Point{s});
      const cplx rhs = cplx(k + 0.5, -s) / (k + 1.0);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("infinite-product form converges to the gamma form at O(1/L)") {
  Symbol sym = Symbol::ck(1.5);
  for (double s : {0.0, 1.0, -3.0}) {
    const cplx want = sym.eval(Point{s});
    const double e1 = std::abs(ck_symbol_product_form(1.5, s, 200) - want);
    const double e2 = std::abs(ck_symbol_product_form(1.5, s, 400) - want);
    CHECK(e1 < 0.05);
    CHECK(e2 < 0.6 * e1);  // ~halves
  }
}

TEST_CASE("oscillation budget refusal carries the achieved estimate") {
  OperatorSpec spec = builtin_cesaro(1);
  CHECK_THROWS_AS(symbol_quadrature(spec, Point{4000.0}, 2048), OscillationBudgetError);
  try {
    symbol_quadrature(spec, Point{4000.0}, 2048);
  } catch (const OscillationBudgetError& e) {
    CHECK(e.requested() == 4000.0);
    CHECK(e.budget() == 2048.0);
  }
}

TEST_CASE("closed-form accessor rejects quadrature-only symbols") {
  AxisQuadrature ax;
  ax.grade_lo = true;
  OperatorSpec odd(MeasureSpace::box({0.0}, {2.0}, {ax}), KernelSpec::constant(1.0),
                   CommutingFamily::diagonal({EigenvalueForm::coordinate(0)}), 2.0, 1);
  Symbol sym = Symbol::for_spec(odd);
  CHECK_FALSE(sym.closed_form());
  CHECK_THROWS_AS(symbol_closed_form(sym, Point{0.0}), SpecError);
  // but it still evaluates by quadrature: integral over [0,2] of u^{-1/2} = 2 sqrt 2
  CHECK(std::abs(sym.eval(Point{0.0}) - cplx(2.0 * std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("p != 2 symbol is still well-defined (diagnostic)") {
  Symbol sym = Symbol::cesaro(1, 4.0);
  // integral u^{-1/4 - is} at s=0: 4/3
  CHECK(std::abs(sym.eval(Point{0.0}) - cplx(4.0 / 3.0)) < 1e-14);
  CHECK(std::abs(symbol_quadrature(builtin_cesaro(1, 4.0), Point{0.0}) - cplx(4.0 / 3.0)) <
        1e-10);
}
