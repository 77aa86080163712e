#pragma once

#include <stdexcept>

namespace starq {

// Physical constants of the oscillator. All formulas depend only on the
// combinations gamma/omega, omega*t and H/(hbar*omega); keeping the raw
// constants lets callers work in any unit system.
struct PhysParams {
  double m = 1.0;      // mass, > 0
  double omega = 1.0;  // frequency, > 0
  double hbar = 1.0;   // action, > 0
  double gamma = 0.0;  // damping rate, >= 0

  void validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("PhysParams: m must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("PhysParams: omega must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("PhysParams: hbar must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("PhysParams: gamma must be >= 0");
  }

  double gamma_over_omega() const { return gamma / omega; }

  PhysParams with_gamma(double g) const {
    PhysParams p = *this;
    p.gamma = g;
    return p;
  }
};

}  // namespace starq
