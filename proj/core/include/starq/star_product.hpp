#pragma once

#include <variant>

#include "starq/exp_poly.hpp"
#include "starq/observables.hpp"

namespace starq {

enum class StarKind { Moyal, Gamma };

// A star product is a kind plus the physical constants it deforms with.
// Gamma with params.gamma == 0 follows the gamma code path but reproduces
// Moyal results exactly.
struct ProductKind {
  StarKind kind = StarKind::Moyal;
  PhysParams params;

  static ProductKind moyal(const PhysParams& p) { return {StarKind::Moyal, p}; }
  static ProductKind gamma(const PhysParams& p) { return {StarKind::Gamma, p}; }

  double gamma_rate() const { return kind == StarKind::Moyal ? 0.0 : params.gamma; }
};

using Symbol = std::variant<PhasePoly, ExpPoly>;

// f * g + sum_{k>=1} (1/k!) (i hbar/2)^k B_k(f, g), with B_k the k-th power
// of the Poisson (Moyal) or dissipative (Gamma) bidifferential operator.
// The series terminates because each B_k takes k derivatives of each factor,
// so at least one factor must be a polynomial.
PhasePoly star(const ProductKind& prod, const PhasePoly& f, const PhasePoly& g);
ExpPoly star(const ProductKind& prod, const PhasePoly& f, const ExpPoly& g);
ExpPoly star(const ProductKind& prod, const ExpPoly& f, const PhasePoly& g);
Symbol star(const ProductKind& prod, const Symbol& f, const Symbol& g);

// (f * g - g * f) / (i hbar).
PhasePoly star_bracket(const ProductKind& prod, const PhasePoly& f, const PhasePoly& g);
ExpPoly star_bracket(const ProductKind& prod, const PhasePoly& f, const ExpPoly& g);
ExpPoly star_bracket(const ProductKind& prod, const ExpPoly& f, const PhasePoly& g);

// Left fold f * f * ... * f (n factors); n = 0 gives the constant 1.
PhasePoly star_power(const ProductKind& prod, const PhasePoly& f, int n);

// Partial sum sum_{n<=terms} (t / i hbar)^n H^{*n} / n! for the oscillator
// Hamiltonian of prod.params. Complex t is allowed so shifted-time checks
// can regularize the series.
PhasePoly star_exp_series(const ProductKind& prod, Complex t, int terms);

// Closed-form evolution kernel. Moyal:
//   sec(omega t/2) exp((2H / i hbar omega) tan(omega t/2));
// Gamma:
//   exp(gamma t/2) sec(omega t/2) kappa^(-1/2)
//     exp(-(i/hbar omega) tan(omega t/2) (m omega^2 q^2 + p^2/(m kappa))),
// with kappa = 1 + (2 gamma/omega) tan(omega t/2). Throws SingularTime when
// cos(omega t/2) or kappa vanishes.
ExpPoly star_exp_closed(const ProductKind& prod, Complex t);

enum class Direction { forward, inverse };

// The equivalence operator exp(-(i hbar m gamma / 2) d^2/dp^2) between the
// Moyal and Gamma products (forward), and its inverse. Intertwines the
// products: forward(f *_M g) = forward(f) *_gamma forward(g).
ExpPoly equivalence_transform(const ExpPoly& f, const PhysParams& params, Direction dir);
PhasePoly equivalence_transform(const PhasePoly& f, const PhysParams& params, Direction dir);
Symbol equivalence_transform(const Symbol& f, const PhysParams& params, Direction dir);

}  // namespace starq
