#include "starq/eigensystem.hpp"

#include <cmath>
#include <string>
#include <vector>

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

void check_level(int n) {
  if (n < 0 || n > kMaxLevel)
    throw DegreeOverflow("eigensystem: level " + std::to_string(n) +
                         " outside supported range 0.." + std::to_string(kMaxLevel));
}

Complex mixing(const PhysParams& p) {
  const Complex s(1.0, -2.0 * p.gamma / p.omega);
  return Complex(0.0, p.gamma / p.omega) / s;
}

}  // namespace

ExpPoly vacuum(const ProductKind& kind) {
  const PhysParams& p = kind.params;
  QuadExp x;
  x.A = p.m * p.omega / p.hbar;
  if (kind.kind == StarKind::Moyal || kind.params.gamma == 0.0) {
    x.B = 1.0 / (p.m * p.omega * p.hbar);
    return ExpPoly(2.0, PhasePoly(1.0), x);
  }
  const Complex s(1.0, -2.0 * p.gamma / p.omega);
  x.B = 1.0 / (p.m * p.omega * p.hbar * s);
  return ExpPoly(2.0 / std::sqrt(s), PhasePoly(1.0), x);
}

ExpPoly ladder_state(const ProductKind& kind, int n) {
  check_level(n);
  const PhasePoly abar = creation(kind.params);
  ExpPoly state = vacuum(kind);
  for (int i = 0; i < n; ++i) state = star(kind, abar, state);
  return state;
}

ExpPoly hermite_state(const ProductKind& kind, int n) {
  check_level(n);
  const PhysParams& p = kind.params;
  const Complex gam = (kind.kind == StarKind::Gamma) ? mixing(p) : Complex(0.0);
  const PhasePoly bbar = (kind.kind == StarKind::Gamma) ? damped_creation(p) : creation(p);

  // (1/sqrt(n!)) sum_j (-1)^j n!/((n-2j)! j!) 2^(n-2j) Gamma^j bbar^(n-2j);
  // the half powers of the mixing parameter cancel against the Hermite
  // argument, so only integer powers appear.
  PhasePoly acc;
  std::vector<PhasePoly> bpow(n + 1, PhasePoly(1.0));
  for (int k = 1; k <= n; ++k) bpow[k] = bpow[k - 1] * bbar;
  Complex gpow = 1.0;
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      gpow *= gam;
      if (gpow == Complex(0.0)) break;
    }
    double w = factorial(n) / (factorial(n - 2 * j) * factorial(j));
    w *= std::pow(2.0, n - 2 * j);
    if (j % 2 != 0) w = -w;
    acc += bpow[n - 2 * j] * (w * gpow);
  }
  acc *= 1.0 / std::sqrt(factorial(n));
  const ExpPoly vac = vacuum(kind);
  return ExpPoly(vac.prefactor(), acc * vac.poly(), vac.exponent());
}

ExpPoly eigenstate(const ProductKind& kind, int n) {
  // The closed form is already unit norm; normalize anyway so the returned
  // basis is orthonormal by computation, not by trust in the formula.
  return normalize(hermite_state(kind, n), kind.params).first;
}

ExpPoly laguerre_projector(const ProductKind& kind, int n) {
  check_level(n);
  const PhysParams& p = kind.params;
  const PhasePoly h = hamiltonian(p);
  if (2 * n > PhasePoly::kMaxDegree)
    throw DegreeOverflow("laguerre_projector: degree exceeds supported maximum");

  // 2 exp(-2H/hbar omega) (-1)^n L_n(4H/hbar omega), with
  // L_n(x) = sum_k binom(n,k) (-x)^k / k!.
  PhasePoly acc;
  PhasePoly hpow(1.0);
  const double scale = 4.0 / (p.hbar * p.omega);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) hpow *= h;
    double w = factorial(n) / (factorial(k) * factorial(n - k)) / factorial(k);
    for (int i = 0; i < k; ++i) w *= -scale;
    acc += hpow * w;
  }
  if (n % 2 != 0) acc *= Complex(-1.0);

  QuadExp x;
  x.A = p.m * p.omega / p.hbar;
  x.B = 1.0 / (p.m * p.omega * p.hbar);
  ExpPoly moyal(2.0, std::move(acc), x);
  if (kind.kind == StarKind::Moyal) return moyal;
  return equivalence_transform(moyal, p, Direction::forward);
}

ExpPoly eigenfunction(const EigenLabel& label, const PhysParams& params) {
  const ProductKind kind{label.kind, params};
  return label.picture == Picture::Schrodinger ? eigenstate(kind, label.n)
                                               : laguerre_projector(kind, label.n);
}

Complex l2_inner(const ExpPoly& f, const ExpPoly& g, const PhysParams& params) {
  return gauss_integrate(f.conjugated() * g, params);
}

std::pair<ExpPoly, double> normalize(const ExpPoly& f, const PhysParams& params) {
  const Complex n2 = l2_inner(f, f, params);
  if (!(n2.real() > 1e-300))
    throw ZeroNorm("normalize: state has vanishing L2 norm");
  const double norm = std::sqrt(n2.real());
  return {f * Complex(1.0 / norm), norm};
}

Energy energy_level(const ProductKind& kind, int n) {
  const PhysParams& p = kind.params;
  const double re = p.hbar * p.omega * (n + 0.5);
  if (kind.kind == StarKind::Moyal) return {Complex(re, 0.0)};
  return {Complex(re, p.hbar * p.omega * p.gamma / (2.0 * p.omega))};
}

}  // namespace starq
