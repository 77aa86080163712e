#include "doctest.h"
#include "starq/starq.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace starq;

namespace {

const PhysParams kUnit{1.0, 1.0, 1.0, 0.5};

ExpPoly random_gaussian_state(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  PhasePoly poly;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      poly += PhasePoly::monomial(i, j, Complex(u(rng), u(rng)));
  QuadExp x;
  x.A = Complex(1.0 + 0.5 * u(rng), 0.3 * u(rng));
  x.B = Complex(1.0 + 0.5 * u(rng), 0.3 * u(rng));
  x.C = Complex(0.4 * u(rng), 0.2 * u(rng));
  x.Dq = Complex(u(rng), u(rng));
  x.Dp = Complex(u(rng), u(rng));
  return ExpPoly(Complex(1.0, u(rng)), poly, x);
}

}  // namespace

TEST_SUITE("gauss_class") {

TEST_CASE("derivatives stay in class") {
  QuadExp x;
  x.A = 1.0;
  const ExpPoly g(1.0, PhasePoly(1.0), x);  // exp(-q^2)
  const ExpPoly dg = g.derive(Var::q);
  CHECK(max_coeff_dist(dg.effective_poly(), PhasePoly::monomial(1, 0, -2.0)) < 1e-15);

  // p-derivative of the vacuum pulls down -2p/(m hbar omega).
  const ExpPoly vac = vacuum(ProductKind::moyal(kUnit));
  const ExpPoly dvac = vac.derive(Var::p);
  const ExpPoly expect = PhasePoly::monomial(0, 1, -2.0 / (kUnit.m * kUnit.hbar * kUnit.omega)) * vac;
  CHECK(dvac.dist(expect) < 1e-14);

  // Constant exponent: derivative of a constant function vanishes.
  QuadExp konst;
  konst.E = Complex(0.3, 0.4);
  const ExpPoly c(2.0, PhasePoly(1.0), konst);
  CHECK(c.derive(Var::q).effective_poly().is_zero());
}

TEST_CASE("pointwise evaluation agrees with the parts") {
  std::mt19937_64 rng(3);
  const ExpPoly f = random_gaussian_state(rng, 3);
  const Complex q(0.3, 0.0), p(-1.2, 0.0);
  const Complex direct = f.prefactor() * f.poly().eval(q, p) *
                         std::exp(-f.exponent().form(q, p));
  CHECK(std::abs(f.eval(q, p) - direct) == 0.0);
}

TEST_CASE("vacuum integrals") {
  // |pi_0|^2 integrates to one at unit parameters.
  const ExpPoly vac = vacuum(ProductKind::moyal(PhysParams{}));
  CHECK(std::abs(gauss_integrate(vac.conjugated() * vac, PhysParams{}) - 1.0) < 1e-12);

  // Same for the damped vacuum at several damping ratios.
  for (const double r : {0.1, 0.5, 1.0}) {
    PhysParams p = kUnit.with_gamma(r);
    const ExpPoly gv = vacuum(ProductKind::gamma(p));
    CHECK(std::abs(gauss_integrate(gv.conjugated() * gv, p) - 1.0) < 1e-10);
  }

  // Odd integrand vanishes.
  const ExpPoly odd = PhasePoly::variable(Var::q) * vac;
  CHECK(std::abs(gauss_integrate(odd, PhysParams{})) < 1e-14);
}

TEST_CASE("non positive definite exponents are rejected") {
  QuadExp x;
  x.A = Complex(-1.0, 0.0);
  x.B = 1.0;
  CHECK_THROWS_AS(gauss_integrate(ExpPoly(1.0, PhasePoly(1.0), x), kUnit), NonIntegrable);

  QuadExp y;  // cross term spoils positive definiteness
  y.A = 0.5;
  y.B = 0.5;
  y.C = 1.5;
  CHECK_THROWS_AS(gauss_integrate(ExpPoly(1.0, PhasePoly(1.0), y), kUnit), NonIntegrable);
}

TEST_CASE("gaussian integration against quadrature") {
  std::mt19937_64 rng(5);
  const PhysParams unit{};
  const ExpPoly vac = vacuum(ProductKind::moyal(unit));
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    PhasePoly poly;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j)
        poly += PhasePoly::monomial(i, j, Complex(u(rng), u(rng)));
    const ExpPoly f = poly * vac;
    const Complex exact = gauss_integrate(f, unit);
    const Complex quad = test::quadrature_integrate(
        [&](double q, double p) { return f.eval(q, p); }, unit);
    CHECK(std::abs(exact - quad) < 1e-8);
  }
}

TEST_CASE("integration is linear and conjugation consistent") {
  std::mt19937_64 rng(6);
  const ExpPoly f = random_gaussian_state(rng, 3);
  const ExpPoly g(Complex(0.7, -0.2), f.poly() * PhasePoly::variable(Var::p), f.exponent());
  const Complex a(0.3, 1.1);

  const Complex lhs = gauss_integrate(f.add(g * a), kUnit);
  const Complex rhs = gauss_integrate(f, kUnit) + a * gauss_integrate(g, kUnit);
  CHECK(std::abs(lhs - rhs) < 1e-12);

  CHECK(std::abs(gauss_integrate(f.conjugated(), kUnit) -
                 std::conj(gauss_integrate(f, kUnit))) < 1e-13);
}

TEST_CASE("heat operator on polynomials terminates") {
  const Complex c(0.3, -0.2);
  const PhasePoly p2 = PhasePoly::monomial(0, 2, 1.0);
  PhasePoly expect = p2;
  expect += PhasePoly(2.0 * c);
  CHECK(max_coeff_dist(heat_apply(c, p2), expect) < 1e-15);

  // Embedded as an ExpPoly with zero exponent gives the same series.
  const ExpPoly viaclass = heat_apply(c, ExpPoly(p2));
  CHECK(max_coeff_dist(viaclass.effective_poly(), expect) < 1e-15);
}

TEST_CASE("heat operator maps the vacuum to the damped vacuum") {
  for (const double r : {0.1, 0.5, 1.0}) {
    const PhysParams p = kUnit.with_gamma(r);
    const Complex c(0.0, -p.hbar * p.m * p.gamma / 2.0);
    const ExpPoly image = heat_apply(c, vacuum(ProductKind::moyal(p)));
    CHECK(image.dist(vacuum(ProductKind::gamma(p))) < 1e-12);
  }
}

TEST_CASE("heat operator against the truncated derivative series") {
  // Small diffusion on a Gaussian state: the symbolic derivative series
  // converges and must match the closed form pointwise.
  std::mt19937_64 rng(8);
  const ExpPoly f = random_gaussian_state(rng, 2);
  const Complex c(0.04, 0.03);
  const ExpPoly closed = heat_apply(c, f);

  const double grid[5][2] = {{0.0, 0.0}, {0.4, -0.2}, {-0.9, 0.5}, {0.2, 1.0}, {-0.3, -0.8}};
  for (const auto& pt : grid) {
    Complex series = f.eval(pt[0], pt[1]);
    ExpPoly term = f;
    Complex scale = 1.0;
    for (int k = 1; k <= 30; ++k) {
      term = term.derive(Var::p, 2);
      scale *= c / double(k);
      series += scale * term.eval(pt[0], pt[1]);
    }
    CHECK(std::abs(closed.eval(pt[0], pt[1]) - series) < 1e-9);
  }
}

TEST_CASE("heat operator inverse pair") {
  // The inverse pair is branch-safe for any c: the forward and backward
  // widths are reciprocal, so the square-root arguments cancel exactly.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const ExpPoly f = random_gaussian_state(rng, 3);
    std::uniform_real_distribution<double> u(-0.25, 0.25);
    const Complex c1(u(rng), u(rng));
    CHECK(heat_apply(-c1, heat_apply(c1, f)).dist(f) < 1e-9);
  }
}

TEST_CASE("heat operator semigroup on the principal branch domain") {
  // Imaginary diffusion constants on positive-real widths (the equivalence
  // operator family): 1 + 4cB stays in the right half plane at every stage,
  // so the principal square roots compose multiplicatively.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> w(0.7, 1.4);
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_real_distribution<double> uc(-0.4, 0.4);
    PhasePoly poly;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j)
        poly += PhasePoly::monomial(i, j, Complex(u(rng), u(rng)));
    QuadExp x;
    x.A = w(rng);
    x.B = w(rng);
    x.C = Complex(0.3 * u(rng), 0.3 * u(rng));
    x.Dq = Complex(u(rng), u(rng));
    x.Dp = Complex(u(rng), u(rng));
    const ExpPoly f(Complex(1.0, u(rng)), poly, x);

    const Complex c1(0.0, u(rng));
    const Complex c2(0.0, u(rng));
    const ExpPoly once = heat_apply(c1 + c2, f);
    const ExpPoly twice = heat_apply(c1, heat_apply(c2, f));
    CHECK(twice.dist(once) < 1e-9);
  }
}

TEST_CASE("singular width is reported") {
  QuadExp x;
  x.A = 1.0;
  x.B = 1.0;
  const ExpPoly f(1.0, PhasePoly(1.0), x);
  CHECK_THROWS_AS(heat_apply(Complex(-0.25, 0.0), f), SingularWidth);
}

TEST_CASE("moment tables match one-shot integration") {
  std::mt19937_64 rng(10);
  const ExpPoly f = random_gaussian_state(rng, 4);
  const GaussMoments table(f.exponent(), 6, kUnit);
  const Complex via_table = f.prefactor() * table.integrate(f.poly());
  CHECK(std::abs(via_table - gauss_integrate(f, kUnit)) < 1e-13);
}

}  // TEST_SUITE
