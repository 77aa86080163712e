#pragma once

// Independent test oracles. Everything here is deliberately implemented
// through a different route than the library code it checks.

#include <complex>
#include <functional>
#include <vector>

#include "starq/starq.hpp"

namespace starq::test {

// Tensor Gauss-Legendre quadrature of f over [-extent, extent]^2 against
// the Liouville measure dq dp / (2 pi hbar), 400 nodes per axis.
Complex quadrature_integrate(const std::function<Complex(double, double)>& f,
                             const PhysParams& params, double extent = 12.0,
                             int nodes = 400);

// Right-fold star power f * (f * (... * f)), an independent path against
// the library's left fold.
PhasePoly star_power_right_fold(const ProductKind& prod, const PhasePoly& f, int n);

// Explicit series star product sum_k (i hbar/2)^k B_k(f,g)/k! computed from
// the standalone bracket powers, not the engine's internal term expansion.
PhasePoly star_via_bracket_series(const ProductKind& prod, const PhasePoly& f,
                                  const PhasePoly& g);

// Values of the damped Heisenberg projectors at a fixed phase-space point,
// extracted coefficient-wise from the equivalence image of the Laguerre
// generating function by a contour integral over |s| = radius.
std::vector<Complex> damped_projector_values(const PhysParams& params, Complex q,
                                             Complex p, int max_level,
                                             double radius = 0.8, int samples = 4096);

}  // namespace starq::test
