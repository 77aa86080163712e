#include "doctest.h"
#include "starq/starq.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace starq;

namespace {

PhasePoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  PhasePoly f;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      f += PhasePoly::monomial(i, j, Complex(u(rng), u(rng)));
  return f;
}

const PhysParams kUnit{1.0, 1.0, 1.0, 0.5};

}  // namespace

TEST_SUITE("phase_poly") {

TEST_CASE("derivatives follow the power rule") {
  const PhasePoly q2p = PhasePoly::monomial(2, 1, 1.0);
  CHECK(max_coeff_dist(q2p.derive(Var::q), PhasePoly::monomial(1, 1, 2.0)) == 0.0);
  CHECK(q2p.derive(Var::p, 2).is_zero());

  PhysParams p = kUnit;
  p.m = 2.0;
  const PhasePoly h = hamiltonian(p);
  CHECK(max_coeff_dist(h.derive(Var::p), PhasePoly::monomial(0, 1, 1.0 / p.m)) < 1e-15);
}

TEST_CASE("evaluation") {
  const PhasePoly h = hamiltonian(kUnit);
  CHECK(std::abs(h.eval(0.0, 0.0)) == 0.0);

  PhasePoly qp1 = PhasePoly::monomial(1, 1, 1.0);
  qp1 += PhasePoly(1.0);
  CHECK(qp1.eval(1.0, 2.0) == Complex(3.0));

  // abar * a equals H / (hbar omega) pointwise.
  PhysParams pp{1.3, 0.7, 2.1, 0.0};
  const PhasePoly prod = creation(pp) * annihilation(pp);
  const PhasePoly h2 = hamiltonian(pp);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 10; ++i) {
    const Complex q(u(rng)), p(u(rng));
    CHECK(std::abs(prod.eval(q, p) - h2.eval(q, p) / (pp.hbar * pp.omega)) < 1e-12);
  }
}

TEST_CASE("canonical sparse form drops zero coefficients") {
  PhasePoly f = PhasePoly::monomial(2, 0, 1.0);
  f -= PhasePoly::monomial(2, 0, 1.0);
  CHECK(f.is_zero());
  CHECK(f.total_degree() == -1);

  PhasePoly g = PhasePoly::monomial(3, 1, 1.0);
  g += PhasePoly::monomial(0, 0, 1e-20);
  for (const auto& [m, c] : g.terms()) CHECK(std::abs(c) > 1e-16);
}

TEST_CASE("degree cap is a reported error") {
  CHECK_THROWS_AS(PhasePoly::monomial(81, 0, 1.0), DegreeOverflow);
  const PhasePoly big = PhasePoly::monomial(50, 0, 1.0);
  PhasePoly other = PhasePoly::monomial(40, 0, 1.0);
  CHECK_THROWS_AS(big * other, DegreeOverflow);
}

TEST_CASE("poisson bracket powers") {
  const PhasePoly q = PhasePoly::variable(Var::q);
  const PhasePoly p = PhasePoly::variable(Var::p);
  CHECK(max_coeff_dist(bracket_power_p(1, q, p), PhasePoly(1.0)) == 0.0);
  CHECK(max_coeff_dist(bracket_power_p(2, q * q, p * p), PhasePoly(4.0)) == 0.0);
  const PhasePoly h = hamiltonian(kUnit);
  CHECK(bracket_power_p(1, h, h).is_zero());
}

TEST_CASE("dissipative bracket matches the closed evaluations") {
  const PhasePoly q = PhasePoly::variable(Var::q);
  const PhasePoly p = PhasePoly::variable(Var::p);
  const PhasePoly h = hamiltonian(kUnit);

  // M(p, H) = -m omega^2 q - 2 gamma p
  PhasePoly expect = q * Complex(-kUnit.m * kUnit.omega * kUnit.omega);
  expect += p * Complex(-2.0 * kUnit.gamma);
  CHECK(max_coeff_dist(bracket_power_m(1, p, h, kUnit), expect) < 1e-15);

  // M(H, H) = -(2 gamma / m) p^2
  CHECK(max_coeff_dist(bracket_power_m(1, h, h, kUnit),
                       PhasePoly::monomial(0, 2, -2.0 * kUnit.gamma / kUnit.m)) < 1e-15);

  // M(p, p) = -2 gamma m
  CHECK(max_coeff_dist(bracket_power_m(1, p, p, kUnit),
                       PhasePoly(-2.0 * kUnit.gamma * kUnit.m)) < 1e-15);
}

TEST_CASE("bracket properties on random polynomials") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const PhasePoly f = random_poly(rng, 4);
    const PhasePoly g = random_poly(rng, 4);

    // Antisymmetric part is twice the Poisson bracket.
    const PhasePoly anti = bracket_power_m(1, f, g, kUnit) - bracket_power_m(1, g, f, kUnit);
    CHECK(max_coeff_dist(anti, bracket_power_p(1, f, g) * Complex(2.0)) < 1e-12);

    // Derivation in each argument.
    const PhasePoly f3 = random_poly(rng, 3);
    const PhasePoly g3 = random_poly(rng, 3);
    const PhasePoly h3 = random_poly(rng, 3);
    const PhasePoly lhs = bracket_power_m(1, f3 * g3, h3, kUnit);
    const PhasePoly rhs = f3 * bracket_power_m(1, g3, h3, kUnit) +
                          bracket_power_m(1, f3, h3, kUnit) * g3;
    CHECK(max_coeff_dist(lhs, rhs) < 1e-12);

    // Hochschild coboundary form with theta = (1/2) d^2/dp^2.
    const auto theta = [](const PhasePoly& x) { return x.derive(Var::p, 2) * Complex(0.5); };
    const PhasePoly cob = f * theta(g) - theta(f * g) + theta(f) * g;
    CHECK(max_coeff_dist(bracket_power_m(1, f, g, kUnit),
                         bracket_power_p(1, f, g) + cob * Complex(2.0 * kUnit.m * kUnit.gamma)) <
          1e-12);
  }
}

TEST_CASE("gamma zero reduces the dissipative bracket to the Poisson one") {
  std::mt19937_64 rng(100);
  const PhysParams p0 = kUnit.with_gamma(0.0);
  for (int trial = 0; trial < 10; ++trial) {
    const PhasePoly f = random_poly(rng, 4);
    const PhasePoly g = random_poly(rng, 4);
    for (int k = 1; k <= 4; ++k)
      CHECK(max_coeff_dist(bracket_power_m(k, f, g, p0), bracket_power_p(k, f, g)) == 0.0);
  }
}

TEST_CASE("scaling maps round trip and commute with arithmetic") {
  PhysParams raw{2.3, 0.7, 1.9, 0.4};
  std::mt19937_64 rng(11);
  const PhasePoly f = random_poly(rng, 4);
  const PhasePoly g = random_poly(rng, 4);

  const PhasePoly back = from_dimensionless(to_dimensionless(f, raw), raw);
  CHECK(max_coeff_dist(back, f) < 1e-12);

  const PhasePoly prod_raw = bracket_power_m(2, f, g, raw);
  // Brackets pick up 1/hbar per order; the dimensionless bracket of the
  // scaled inputs matches the scaled bracket times hbar^k.
  const PhasePoly prod_scaled = bracket_power_m(
      2, to_dimensionless(f, raw), to_dimensionless(g, raw), dimensionless_params(raw));
  const PhasePoly lifted = from_dimensionless(prod_scaled, raw) *
                           Complex(1.0 / (raw.hbar * raw.hbar));
  CHECK(max_coeff_dist(prod_raw, lifted) < 1e-10);
}

}  // TEST_SUITE
