#pragma once

#include "starq/exp_poly.hpp"

namespace starq {

// Nondimensionalization maps. The rescaling q = lq * Q, p = lp * P with
// lq = sqrt(hbar/(m omega)) and lp = sqrt(m hbar omega) sends the physical
// problem to m = omega = hbar = 1 with damping gamma/omega; star products,
// brackets and integrals commute with these maps.
struct Scaling {
  double lq;
  double lp;

  explicit Scaling(const PhysParams& params)
      : lq(std::sqrt(params.hbar / (params.m * params.omega))),
        lp(std::sqrt(params.m * params.hbar * params.omega)) {}
};

PhysParams dimensionless_params(const PhysParams& params);

// f(q,p) expressed in the dimensionless variables: result(Q,P) = f(lq Q, lp P).
PhasePoly to_dimensionless(const PhasePoly& f, const PhysParams& params);
PhasePoly from_dimensionless(const PhasePoly& f, const PhysParams& params);
ExpPoly to_dimensionless(const ExpPoly& f, const PhysParams& params);
ExpPoly from_dimensionless(const ExpPoly& f, const PhysParams& params);

}  // namespace starq
