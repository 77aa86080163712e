#include "starq/star_product.hpp"

#include <algorithm>
#include <cmath>
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

// One (a, b, c) term of the expanded bidifferential power: scalar weight
// times d_q^a d_p^(b+c) on the left factor and d_q^b d_p^(a+c) on the right.
// Moyal terms are the c == 0 slice, so gamma == 0 runs through the exact
// same arithmetic as the Moyal product.
struct BracketTerm {
  int fq, fp, gq, gp;
  double weight;
};

std::vector<BracketTerm> bracket_terms(const ProductKind& prod, int k) {
  const double w = -2.0 * prod.gamma_rate() * prod.params.m;
  std::vector<BracketTerm> terms;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; a + b <= k; ++b) {
      const int c = k - a - b;
      if (c > 0 && w == 0.0) continue;
      double weight = factorial(k) / (factorial(a) * factorial(b) * factorial(c));
      if (b % 2 != 0) weight = -weight;
      for (int i = 0; i < c; ++i) weight *= w;
      terms.push_back({a, b + c, b, a + c, weight});
    }
  }
  return terms;
}

// Table of mixed partial derivative polynomials, indexed [qorder][porder].
std::vector<std::vector<PhasePoly>> partials(const PhasePoly& f, int maxq, int maxp) {
  std::vector<std::vector<PhasePoly>> t(maxq + 1, std::vector<PhasePoly>(maxp + 1));
  t[0][0] = f;
  for (int a = 1; a <= maxq; ++a) t[a][0] = t[a - 1][0].derive(Var::q);
  for (int a = 0; a <= maxq; ++a)
    for (int b = 1; b <= maxp; ++b) t[a][b] = t[a][b - 1].derive(Var::p);
  return t;
}

// Same table for the polynomial part of an ExpPoly relative to its fixed
// exponent and prefactor.
std::vector<std::vector<PhasePoly>> partials(const ExpPoly& f, int maxq, int maxp) {
  const QuadExp& x = f.exponent();
  PhasePoly fq = PhasePoly::monomial(1, 0, 2.0 * x.A);
  fq += PhasePoly::monomial(0, 1, x.C);
  fq += PhasePoly(x.Dq);
  PhasePoly fp = PhasePoly::monomial(0, 1, 2.0 * x.B);
  fp += PhasePoly::monomial(1, 0, x.C);
  fp += PhasePoly(x.Dp);

  std::vector<std::vector<PhasePoly>> t(maxq + 1, std::vector<PhasePoly>(maxp + 1));
  t[0][0] = f.poly();
  for (int a = 1; a <= maxq; ++a)
    t[a][0] = t[a - 1][0].derive(Var::q) - t[a - 1][0] * fq;
  for (int a = 0; a <= maxq; ++a)
    for (int b = 1; b <= maxp; ++b)
      t[a][b] = t[a][b - 1].derive(Var::p) - t[a][b - 1] * fp;
  return t;
}

Complex half_i_hbar(const ProductKind& prod) {
  return Complex(0.0, prod.params.hbar / 2.0);
}

}  // namespace

PhasePoly star(const ProductKind& prod, const PhasePoly& f, const PhasePoly& g) {
  const int kmax = std::max(0, std::min(f.total_degree(), g.total_degree()));
  PhasePoly acc = f * g;
  if (kmax == 0) return acc;
  const auto df = partials(f, kmax, kmax);
  const auto dg = partials(g, kmax, kmax);
  Complex scale = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    scale *= half_i_hbar(prod) / double(k);
    PhasePoly level;
    for (const auto& t : bracket_terms(prod, k)) {
      const PhasePoly& a = df[t.fq][t.fp];
      if (a.is_zero()) continue;
      const PhasePoly& b = dg[t.gq][t.gp];
      if (b.is_zero()) continue;
      level += (a * b) * Complex(t.weight);
    }
    acc += level * scale;
  }
  return acc;
}

ExpPoly star(const ProductKind& prod, const PhasePoly& f, const ExpPoly& g) {
  const int kmax = std::max(0, f.total_degree());
  const auto df = partials(f, kmax, kmax);
  const auto dg = partials(g, kmax, kmax);
  PhasePoly acc = f * g.poly();
  Complex scale = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    scale *= half_i_hbar(prod) / double(k);
    PhasePoly level;
    for (const auto& t : bracket_terms(prod, k)) {
      const PhasePoly& a = df[t.fq][t.fp];
      if (a.is_zero()) continue;
      const PhasePoly& b = dg[t.gq][t.gp];
      if (b.is_zero()) continue;
      level += (a * b) * Complex(t.weight);
    }
    acc += level * scale;
  }
  return ExpPoly(g.prefactor(), std::move(acc), g.exponent());
}

ExpPoly star(const ProductKind& prod, const ExpPoly& f, const PhasePoly& g) {
  const int kmax = std::max(0, g.total_degree());
  const auto df = partials(f, kmax, kmax);
  const auto dg = partials(g, kmax, kmax);
  PhasePoly acc = f.poly() * g;
  Complex scale = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    scale *= half_i_hbar(prod) / double(k);
    PhasePoly level;
    for (const auto& t : bracket_terms(prod, k)) {
      const PhasePoly& a = df[t.fq][t.fp];
      if (a.is_zero()) continue;
      const PhasePoly& b = dg[t.gq][t.gp];
      if (b.is_zero()) continue;
      level += (a * b) * Complex(t.weight);
    }
    acc += level * scale;
  }
  return ExpPoly(f.prefactor(), std::move(acc), f.exponent());
}

Symbol star(const ProductKind& prod, const Symbol& f, const Symbol& g) {
  if (std::holds_alternative<PhasePoly>(f)) {
    const auto& fp = std::get<PhasePoly>(f);
    if (std::holds_alternative<PhasePoly>(g)) return star(prod, fp, std::get<PhasePoly>(g));
    return star(prod, fp, std::get<ExpPoly>(g));
  }
  const auto& fe = std::get<ExpPoly>(f);
  if (std::holds_alternative<PhasePoly>(g)) return star(prod, fe, std::get<PhasePoly>(g));
  throw UnsupportedOperands("star: neither operand is a polynomial; series does not terminate");
}

PhasePoly star_bracket(const ProductKind& prod, const PhasePoly& f, const PhasePoly& g) {
  const Complex ih(0.0, prod.params.hbar);
  return (star(prod, f, g) - star(prod, g, f)) * (1.0 / ih);
}

ExpPoly star_bracket(const ProductKind& prod, const PhasePoly& f, const ExpPoly& g) {
  const Complex ih(0.0, prod.params.hbar);
  return star(prod, f, g).sub(star(prod, g, f)) * (1.0 / ih);
}

ExpPoly star_bracket(const ProductKind& prod, const ExpPoly& f, const PhasePoly& g) {
  const Complex ih(0.0, prod.params.hbar);
  return star(prod, f, g).sub(star(prod, g, f)) * (1.0 / ih);
}

PhasePoly star_power(const ProductKind& prod, const PhasePoly& f, int n) {
  if (n < 0) throw Error("star_power: negative power");
  const int deg = f.total_degree();
  if (deg > 0 && deg * n > PhasePoly::kMaxDegree)
    throw DegreeOverflow("star_power: degree " + std::to_string(deg * n) +
                         " exceeds maximum " + std::to_string(PhasePoly::kMaxDegree));
  PhasePoly acc(1.0);
  for (int i = 0; i < n; ++i) acc = star(prod, acc, f);
  return acc;
}

PhasePoly star_exp_series(const ProductKind& prod, Complex t, int terms) {
  if (terms < 0) throw Error("star_exp_series: negative term count");
  if (2 * terms > PhasePoly::kMaxDegree)
    throw DegreeOverflow("star_exp_series: " + std::to_string(terms) +
                         " terms exceed the supported degree");
  const PhasePoly h = hamiltonian(prod.params);
  const Complex ih(0.0, prod.params.hbar);
  PhasePoly acc(1.0);
  PhasePoly power(1.0);
  Complex coeff = 1.0;
  for (int n = 1; n <= terms; ++n) {
    power = star(prod, power, h);
    coeff *= t / (ih * double(n));
    acc += power * coeff;
  }
  return acc;
}

ExpPoly star_exp_closed(const ProductKind& prod, Complex t) {
  const PhysParams& pp = prod.params;
  const Complex half = pp.omega * t / 2.0;
  const Complex cosv = std::cos(half);
  if (std::abs(cosv) < 1e-12)
    throw SingularTime("star_exp_closed: cos(omega t/2) vanishes");
  const Complex tanv = std::sin(half) / cosv;

  QuadExp x;
  // Moyal: exponent of exp((2H / i hbar omega) tan(omega t/2)), i.e. the
  // stored (negated) form is (i tan/(hbar omega)) (m omega^2 q^2 + p^2/m).
  const Complex base = Complex(0.0, 1.0) * tanv / (pp.hbar * pp.omega);
  x.A = base * pp.m * pp.omega * pp.omega;

  if (prod.kind == StarKind::Moyal) {
    x.B = base / pp.m;
    return ExpPoly(1.0 / cosv, PhasePoly(1.0), x);
  }

  const Complex kappa = 1.0 + (2.0 * pp.gamma / pp.omega) * tanv;
  if (std::abs(kappa) < 1e-12)
    throw SingularTime("star_exp_closed: 1 + (2 gamma/omega) tan(omega t/2) vanishes");
  x.B = base / (pp.m * kappa);
  const Complex pref = std::exp(pp.gamma * t / 2.0) / (cosv * std::sqrt(kappa));
  return ExpPoly(pref, PhasePoly(1.0), x);
}

ExpPoly equivalence_transform(const ExpPoly& f, const PhysParams& params, Direction dir) {
  const double sign = (dir == Direction::forward) ? -1.0 : 1.0;
  const Complex c(0.0, sign * params.hbar * params.m * params.gamma / 2.0);
  return heat_apply(c, f);
}

PhasePoly equivalence_transform(const PhasePoly& f, const PhysParams& params, Direction dir) {
  const double sign = (dir == Direction::forward) ? -1.0 : 1.0;
  const Complex c(0.0, sign * params.hbar * params.m * params.gamma / 2.0);
  return heat_apply(c, f);
}

Symbol equivalence_transform(const Symbol& f, const PhysParams& params, Direction dir) {
  if (std::holds_alternative<PhasePoly>(f))
    return equivalence_transform(std::get<PhasePoly>(f), params, dir);
  return equivalence_transform(std::get<ExpPoly>(f), params, dir);
}

}  // namespace starq
