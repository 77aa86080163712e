#pragma once

#include <string>
#include <vector>

#include "starq/dissipation.hpp"
#include "starq/fock_matrix.hpp"

namespace starq {

// One named invariant with its observed error. For most checks `pass` means
// observed <= bound; witness checks (named "...witness") instead require the
// observed deviation to exceed the bound.
struct CheckResult {
  std::string name;
  double observed = 0.0;
  double bound = 0.0;
  bool must_exceed = false;
  bool pass = false;
};

CheckResult check_leq(std::string name, double observed, double bound);
CheckResult check_exceeds(std::string name, double observed, double bound);

// Star products, brackets, associativity, the equivalence operator and the
// Hermiticity witnesses.
std::vector<CheckResult> run_algebra_checks(const PhysParams& params);

// Vacua, eigenstates, projectors, spectra, star-exponentials and their
// Fourier data.
std::vector<CheckResult> run_spectra_checks(const PhysParams& params);

// Truncated operator-matrix cross-validation.
std::vector<CheckResult> run_oracle_checks(const PhysParams& params);

// The measurement pipeline.
std::vector<CheckResult> run_dissipation_checks(const PhysParams& params);

std::vector<CheckResult> run_all_checks(const PhysParams& params);

}  // namespace starq
