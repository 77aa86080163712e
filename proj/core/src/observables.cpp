#include "starq/observables.hpp"

#include <cmath>

namespace starq {

PhasePoly hamiltonian(const PhysParams& params) {
  PhasePoly h = PhasePoly::monomial(0, 2, 1.0 / (2.0 * params.m));
  h += PhasePoly::monomial(2, 0, params.m * params.omega * params.omega / 2.0);
  return h;
}

PhasePoly annihilation(const PhysParams& params) {
  const double cp = 1.0 / std::sqrt(2.0 * params.m * params.hbar * params.omega);
  const double cq = std::sqrt(params.m * params.omega / (2.0 * params.hbar));
  PhasePoly a = PhasePoly::monomial(0, 1, cp);
  a += PhasePoly::monomial(1, 0, Complex(0.0, -cq));
  return a;
}

PhasePoly creation(const PhysParams& params) {
  return annihilation(params).conjugated();
}

PhasePoly damped_creation(const PhysParams& params) {
  const double cp = 1.0 / std::sqrt(2.0 * params.m * params.hbar * params.omega);
  const double cq = std::sqrt(params.m * params.omega / (2.0 * params.hbar));
  const Complex s(1.0, -2.0 * params.gamma / params.omega);
  PhasePoly b = PhasePoly::monomial(0, 1, cp / s);
  b += PhasePoly::monomial(1, 0, Complex(0.0, cq));
  return b;
}

}  // namespace starq
