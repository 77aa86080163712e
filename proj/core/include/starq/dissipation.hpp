#pragma once

#include <utility>
#include <vector>

#include "starq/eigensystem.hpp"

namespace starq {

enum class EigenBasis { MoyalEigen, GammaEigen };

// Finite expansion of a state over an oscillator eigenbasis. GammaEigen
// amplitudes refer to the orthonormal damped eigenstates; MoyalEigen
// amplitudes refer to the creation-monomial family a_bar^l rho_0 / sqrt(l!),
// the convention in which the ejection coefficients are defined.
struct StateVector {
  EigenBasis basis = EigenBasis::MoyalEigen;
  PhysParams params;
  std::vector<std::pair<int, Complex>> coeffs;  // (level, amplitude), level ascending

  Complex amplitude(int level) const;
  double norm2() const;
};

struct GammaSchedule {
  struct Segment {
    double gamma;     // damping rate, >= 0
    double duration;  // segment length, > 0
  };
  std::vector<Segment> segments;

  void validate() const;
};

// The complex mixing parameter (i gamma/omega) / (1 - 2i gamma/omega)
// controlling how dissipation couples levels of equal parity.
Complex mixing_parameter(const PhysParams& params);

// Expansion coefficient of level n - 2k when a Moyal level-n state enters
// the damped algebra: Gamma^k / (2^n k!) sqrt(n!/(n-2k)!).
Complex alpha_coefficient(int n, int k, const PhysParams& params);

// Coefficient of level m - 2j when the damped eigenstate of level m is
// mapped back to the Moyal family: (-1)^j Gamma^j 2^(m-2j)/j!
// sqrt(m!/(m-2j)!).
Complex eject_coefficient(int m, int j, const PhysParams& params);

// Closed-form amplitude of level n - 2k after the full
// inject -> evolve(tau) -> eject pipeline (unnormalized).
Complex beta_coefficient(int n, int k, double tau, const PhysParams& params);

// Pipeline stages. inject expresses a Moyal level-n state in the damped
// basis (levels n - 2k only); evolve_damped multiplies each amplitude by
// exp(E_level t / i hbar), whose modulus grows like exp(gamma t / 2);
// eject maps back to the Moyal family, generally leaving the state
// unnormalized.
StateVector inject(int n, const PhysParams& params);
StateVector inject_vector(const StateVector& moyal_state, const PhysParams& params);
StateVector evolve_damped(const StateVector& sv, double t);
StateVector eject(const StateVector& sv, const PhysParams& params);
std::pair<StateVector, double> normalize_state(const StateVector& sv);

// Pure phase rotation of a normalized Moyal state for t >= tau.
StateVector post_evolution(const StateVector& sv, double t, double tau);

struct TransitionRow {
  int k;
  int level;
  double prob;
};

struct TransitionResult {
  std::vector<TransitionRow> rows;  // k ascending
  double norm;                      // N_n(tau), the pre-normalization norm
  double expected_energy;           // sum prob * hbar omega (level + 1/2)
};

// Full pipeline at damping rate gamma for duration tau.
TransitionResult transition_probabilities(int n, double gamma, double tau,
                                          const PhysParams& params);

// Energy expectation of a normalized Moyal-basis state.
double expected_energy(const StateVector& sv, const PhysParams& params);

// Piecewise-constant damping schedule: each segment with gamma > 0 runs
// inject -> evolve -> eject through the Moyal basis; gamma = 0 segments are
// pure phase rotations. Returns the (unnormalized) final Moyal state.
StateVector schedule_evolve(int n, const GammaSchedule& schedule, const PhysParams& params);

// Probabilities after each segment of the schedule.
std::vector<TransitionResult> schedule_trace(int n, const GammaSchedule& schedule,
                                             const PhysParams& params);

// True when omega*tau is an odd multiple of pi, where the pipeline returns
// the initial state with probability one.
bool is_revival_time(double omega_tau, double tol = 1e-12);

// Function-level prescription maps between the two state spaces, used to
// cross-check the coefficient pipeline by L2 projection. The input must be
// a polynomial in the (damped) creation function times the matching vacuum.
ExpPoly prescribe_to_damped(const ExpPoly& moyal_state, const PhysParams& params);
ExpPoly prescribe_to_moyal(const ExpPoly& damped_state, const PhysParams& params);

// The phase-space function represented by a StateVector.
ExpPoly reconstruct(const StateVector& sv);

// Basis member the StateVector amplitudes refer to.
ExpPoly basis_function(EigenBasis basis, int level, const PhysParams& params);

}  // namespace starq
