#pragma once

#include <utility>

#include "starq/star_product.hpp"

namespace starq {

enum class Picture { Schrodinger, Heisenberg };

struct EigenLabel {
  int n = 0;
  Picture picture = Picture::Schrodinger;
  StarKind kind = StarKind::Moyal;
};

// Energy eigenvalue; complex for the damped product.
struct Energy {
  Complex value;  // absolute units
  Complex in_hbar_omega(const PhysParams& p) const { return value / (p.hbar * p.omega); }
};

inline constexpr int kMaxLevel = 40;

// Ground state: 2 exp(-2H / hbar omega) for Moyal, the width-deformed
// Gaussian 2 (1 - 2i gamma/omega)^(-1/2) exp(-(m omega^2 q^2 +
// p^2/(m(1 - 2i gamma/omega))) / hbar omega) for Gamma. Both are
// annihilated by the annihilation function under their product.
ExpPoly vacuum(const ProductKind& kind);

// Unnormalized ladder state: n-fold left star multiplication of the vacuum
// by the creation function.
ExpPoly ladder_state(const ProductKind& kind, int n);

// Closed-form normalized Schrodinger eigenstate of the damped product,
// built from the Hermite polynomial expansion in the damped creation
// function; degenerates to the normalized ladder state at gamma = 0.
ExpPoly hermite_state(const ProductKind& kind, int n);

// Normalized Schrodinger eigenstate (phase convention of hermite_state).
ExpPoly eigenstate(const ProductKind& kind, int n);

// Heisenberg projector: 2 exp(-2H/hbar omega) (-1)^n L_n(4H/hbar omega)
// for Moyal; its equivalence-operator image for Gamma.
ExpPoly laguerre_projector(const ProductKind& kind, int n);

ExpPoly eigenfunction(const EigenLabel& label, const PhysParams& params);

// L2 pairing <f|g> = int conj(f) g dmu; conjugate-linear in the first slot.
Complex l2_inner(const ExpPoly& f, const ExpPoly& g, const PhysParams& params);

// Returns f / ||f|| and the norm. Throws ZeroNorm when <f|f> is not positive.
std::pair<ExpPoly, double> normalize(const ExpPoly& f, const PhysParams& params);

// hbar omega (n + 1/2) for Moyal; hbar omega (n + 1/2 + i gamma/(2 omega))
// for Gamma.
Energy energy_level(const ProductKind& kind, int n);

}  // namespace starq
