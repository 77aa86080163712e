#pragma once

#include "starq/phase_poly.hpp"

namespace starq {

// Mechanical energy H(q,p) = p^2/2m + m omega^2 q^2 / 2.
PhasePoly hamiltonian(const PhysParams& params);

// Dimensionless annihilation function a(q,p) = p/sqrt(2 m hbar omega)
// - i sqrt(m omega / 2 hbar) q, and its conjugate abar.
PhasePoly annihilation(const PhysParams& params);
PhasePoly creation(const PhysParams& params);

// Creation function with the damped momentum scaling,
// bbar(q,p) = abar(q, p / (1 - 2i gamma/omega)).
PhasePoly damped_creation(const PhysParams& params);

}  // namespace starq
