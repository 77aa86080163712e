#include "starq/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace starq {

namespace {

double factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(171, 1.0);
    for (int i = 1; i < 171; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[n];
}

Complex cpow(Complex base, int n) {
  Complex v = 1.0;
  for (int i = 0; i < n; ++i) v *= base;
  return v;
}

void check_level(int n) {
  if (n < 0 || n > kMaxLevel)
    throw DegreeOverflow("dissipation: level " + std::to_string(n) +
                         " outside supported range 0.." + std::to_string(kMaxLevel));
}

StateVector from_map(EigenBasis basis, const PhysParams& params,
                     const std::map<int, Complex>& amps) {
  StateVector out;
  out.basis = basis;
  out.params = params;
  for (const auto& [level, c] : amps)
    if (c != Complex(0.0)) out.coeffs.emplace_back(level, c);
  return out;
}

// Coefficients g_l of a bivariate polynomial assumed to be of the form
// sum_l g_l * linear^l for a linear form with nonzero q part. Read off the
// p = 0 slice, then verify the reconstruction.
std::vector<Complex> univariate_in(const PhasePoly& poly, const PhasePoly& linear) {
  const Complex qcoef = linear.coeff(1, 0);
  const int deg = std::max(0, poly.total_degree());
  std::vector<Complex> g(deg + 1, Complex(0.0));
  Complex denom = 1.0;
  for (int l = 0; l <= deg; ++l) {
    if (l > 0) denom *= qcoef;
    g[l] = poly.coeff(l, 0) / denom;
  }
  PhasePoly rebuilt;
  PhasePoly lpow(1.0);
  for (int l = 0; l <= deg; ++l) {
    if (l > 0) lpow *= linear;
    rebuilt += lpow * g[l];
  }
  const double scale = std::max(1.0, poly.max_abs_coeff());
  if (max_coeff_dist(rebuilt, poly) > 1e-9 * scale)
    throw Error("prescription: state is not a polynomial in the creation function");
  return g;
}

}  // namespace

Complex StateVector::amplitude(int level) const {
  for (const auto& [l, c] : coeffs)
    if (l == level) return c;
  return 0.0;
}

double StateVector::norm2() const {
  double v = 0.0;
  for (const auto& [l, c] : coeffs) v += std::norm(c);
  return v;
}

void GammaSchedule::validate() const {
  if (segments.empty())
    throw std::invalid_argument("GammaSchedule: at least one segment required");
  for (const auto& s : segments) {
    if (!(s.gamma >= 0.0))
      throw std::invalid_argument("GammaSchedule: gamma must be >= 0");
    if (!(s.duration > 0.0))
      throw std::invalid_argument("GammaSchedule: duration must be > 0");
  }
}

Complex mixing_parameter(const PhysParams& params) {
  const double r = params.gamma / params.omega;
  return Complex(0.0, r) / Complex(1.0, -2.0 * r);
}

Complex alpha_coefficient(int n, int k, const PhysParams& params) {
  check_level(n);
  if (k < 0 || 2 * k > n) throw Error("alpha_coefficient: need 0 <= 2k <= n");
  const Complex gam = mixing_parameter(params);
  const double w =
      std::sqrt(factorial(n) / factorial(n - 2 * k)) / (std::pow(2.0, n) * factorial(k));
  return cpow(gam, k) * w;
}

Complex eject_coefficient(int m, int j, const PhysParams& params) {
  check_level(m);
  if (j < 0 || 2 * j > m) throw Error("eject_coefficient: need 0 <= 2j <= m");
  const Complex gam = mixing_parameter(params);
  double w = std::sqrt(factorial(m) / factorial(m - 2 * j)) *
             std::pow(2.0, m - 2 * j) / factorial(j);
  if (j % 2 != 0) w = -w;
  return cpow(gam, j) * w;
}

Complex beta_coefficient(int n, int k, double tau, const PhysParams& params) {
  check_level(n);
  if (k < 0 || 2 * k > n) throw Error("beta_coefficient: need 0 <= 2k <= n");
  const Complex gam = mixing_parameter(params);
  const double w =
      std::sqrt(factorial(n) / factorial(n - 2 * k)) / (std::pow(4.0, k) * factorial(k));
  const Complex phase =
      std::exp(Complex(0.0, -params.omega * tau) * Complex(n + 0.5, params.gamma / (2.0 * params.omega)));
  const Complex winding = std::exp(Complex(0.0, 2.0 * params.omega * tau)) - 1.0;
  return cpow(gam, k) * w * phase * cpow(winding, k);
}

StateVector inject(int n, const PhysParams& params) {
  check_level(n);
  StateVector pure;
  pure.basis = EigenBasis::MoyalEigen;
  pure.params = params;
  pure.coeffs = {{n, Complex(1.0)}};
  return inject_vector(pure, params);
}

StateVector inject_vector(const StateVector& moyal_state, const PhysParams& params) {
  if (moyal_state.basis != EigenBasis::MoyalEigen)
    throw Error("inject_vector: input must be in the Moyal eigenbasis");
  std::map<int, Complex> amps;
  for (const auto& [m, c] : moyal_state.coeffs) {
    check_level(m);
    for (int k = 0; 2 * k <= m; ++k) amps[m - 2 * k] += c * alpha_coefficient(m, k, params);
  }
  return from_map(EigenBasis::GammaEigen, params, amps);
}

StateVector evolve_damped(const StateVector& sv, double t) {
  if (sv.basis != EigenBasis::GammaEigen)
    throw Error("evolve_damped: state must be in the damped eigenbasis");
  StateVector out = sv;
  const PhysParams& p = sv.params;
  for (auto& [level, c] : out.coeffs) {
    // exp(E_level t / i hbar) with E = hbar omega (level + 1/2 + i gamma/2 omega)
    const Complex factor = std::exp(Complex(p.gamma * t / 2.0, -p.omega * t * (level + 0.5)));
    c *= factor;
  }
  return out;
}

StateVector eject(const StateVector& sv, const PhysParams& params) {
  if (sv.basis != EigenBasis::GammaEigen)
    throw Error("eject: state must be in the damped eigenbasis");
  std::map<int, Complex> amps;
  for (const auto& [m, c] : sv.coeffs)
    for (int j = 0; 2 * j <= m; ++j) amps[m - 2 * j] += c * eject_coefficient(m, j, params);
  return from_map(EigenBasis::MoyalEigen, params, amps);
}

std::pair<StateVector, double> normalize_state(const StateVector& sv) {
  const double n2 = sv.norm2();
  if (!(n2 > 0.0)) throw ZeroNorm("normalize_state: zero state");
  const double norm = std::sqrt(n2);
  StateVector out = sv;
  for (auto& [level, c] : out.coeffs) c /= norm;
  return {out, norm};
}

StateVector post_evolution(const StateVector& sv, double t, double tau) {
  if (sv.basis != EigenBasis::MoyalEigen)
    throw Error("post_evolution: state must be in the Moyal eigenbasis");
  if (t < tau) throw Error("post_evolution: t must be >= tau");
  StateVector out = sv;
  const double dt = t - tau;
  for (auto& [level, c] : out.coeffs)
    c *= std::exp(Complex(0.0, -sv.params.omega * (level + 0.5) * dt));
  return out;
}

TransitionResult transition_probabilities(int n, double gamma, double tau,
                                          const PhysParams& params) {
  PhysParams p = params.with_gamma(gamma);
  p.validate();
  const StateVector raw = eject(evolve_damped(inject(n, p), tau), p);
  auto [normed, norm] = normalize_state(raw);

  TransitionResult out;
  out.norm = norm;
  out.expected_energy = expected_energy(normed, p);
  for (int k = 0; 2 * k <= n; ++k) {
    const int level = n - 2 * k;
    out.rows.push_back({k, level, std::norm(normed.amplitude(level))});
  }
  return out;
}

double expected_energy(const StateVector& sv, const PhysParams& params) {
  double e = 0.0;
  for (const auto& [level, c] : sv.coeffs)
    e += std::norm(c) * params.hbar * params.omega * (level + 0.5);
  return e;
}

StateVector schedule_evolve(int n, const GammaSchedule& schedule, const PhysParams& params) {
  schedule.validate();
  check_level(n);
  StateVector sv;
  sv.basis = EigenBasis::MoyalEigen;
  sv.params = params;
  sv.coeffs = {{n, Complex(1.0)}};
  for (const auto& seg : schedule.segments) {
    if (seg.gamma == 0.0) {
      for (auto& [level, c] : sv.coeffs)
        c *= std::exp(Complex(0.0, -params.omega * (level + 0.5) * seg.duration));
      continue;
    }
    const PhysParams p = params.with_gamma(seg.gamma);
    sv = eject(evolve_damped(inject_vector(sv, p), seg.duration), p);
    sv.params = params;
  }
  return sv;
}

std::vector<TransitionResult> schedule_trace(int n, const GammaSchedule& schedule,
                                             const PhysParams& params) {
  schedule.validate();
  std::vector<TransitionResult> out;
  GammaSchedule partial;
  for (const auto& seg : schedule.segments) {
    partial.segments.push_back(seg);
    const StateVector sv = schedule_evolve(n, partial, params);
    auto [normed, norm] = normalize_state(sv);
    TransitionResult r;
    r.norm = norm;
    r.expected_energy = expected_energy(normed, params);
    for (const auto& [level, c] : normed.coeffs)
      r.rows.push_back({(n - level) / 2, level, std::norm(c)});
    std::sort(r.rows.begin(), r.rows.end(),
              [](const TransitionRow& a, const TransitionRow& b) { return a.k < b.k; });
    out.push_back(std::move(r));
  }
  return out;
}

bool is_revival_time(double omega_tau, double tol) {
  const Complex winding = std::exp(Complex(0.0, 2.0 * omega_tau)) - 1.0;
  return std::abs(winding) < tol;
}

ExpPoly basis_function(EigenBasis basis, int level, const PhysParams& params) {
  check_level(level);
  if (basis == EigenBasis::GammaEigen)
    return hermite_state(ProductKind::gamma(params), level);
  // Creation-monomial family a_bar^l rho_0 / sqrt(l!).
  const ExpPoly vac = vacuum(ProductKind::moyal(params));
  const PhasePoly abar = creation(params);
  PhasePoly poly(1.0 / std::sqrt(factorial(level)));
  for (int i = 0; i < level; ++i) poly *= abar;
  return ExpPoly(vac.prefactor(), poly * vac.poly(), vac.exponent());
}

ExpPoly reconstruct(const StateVector& sv) {
  if (sv.coeffs.empty()) throw ZeroNorm("reconstruct: empty state");
  ExpPoly acc = basis_function(sv.basis, sv.coeffs.front().first, sv.params) *
                sv.coeffs.front().second;
  for (size_t i = 1; i < sv.coeffs.size(); ++i)
    acc = acc.add(basis_function(sv.basis, sv.coeffs[i].first, sv.params) *
                  sv.coeffs[i].second);
  return acc;
}

ExpPoly prescribe_to_damped(const ExpPoly& moyal_state, const PhysParams& params) {
  const ExpPoly vac_m = vacuum(ProductKind::moyal(params));
  const ExpPoly vac_g = vacuum(ProductKind::gamma(params));
  if (moyal_state.exponent().dist(vac_m.exponent()) > 1e-9)
    throw Error("prescribe_to_damped: state does not share the Moyal vacuum Gaussian");
  const Complex rel = moyal_state.prefactor() / vac_m.prefactor();
  const auto g = univariate_in(moyal_state.poly() * rel, creation(params));
  const PhasePoly bbar = damped_creation(params);
  PhasePoly poly;
  PhasePoly bpow(1.0);
  for (size_t l = 0; l < g.size(); ++l) {
    if (l > 0) bpow *= bbar;
    poly += bpow * g[l];
  }
  return ExpPoly(vac_g.prefactor(), std::move(poly), vac_g.exponent());
}

ExpPoly prescribe_to_moyal(const ExpPoly& damped_state, const PhysParams& params) {
  const ExpPoly vac_m = vacuum(ProductKind::moyal(params));
  const ExpPoly vac_g = vacuum(ProductKind::gamma(params));
  if (damped_state.exponent().dist(vac_g.exponent()) > 1e-9)
    throw Error("prescribe_to_moyal: state does not share the damped vacuum Gaussian");
  const Complex rel = damped_state.prefactor() / vac_g.prefactor();
  const auto g = univariate_in(damped_state.poly() * rel, damped_creation(params));
  const PhasePoly abar = creation(params);
  PhasePoly poly;
  PhasePoly apow(1.0);
  for (size_t l = 0; l < g.size(); ++l) {
    if (l > 0) apow *= abar;
    poly += apow * g[l];
  }
  return ExpPoly(vac_m.prefactor(), std::move(poly), vac_m.exponent());
}

}  // namespace starq
