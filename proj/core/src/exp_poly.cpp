#include "starq/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
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

double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Coefficients M_r such that
//   int q^i exp(-a q^2 - u q) dq = exp(u^2/(4a)) * sum_r M_r u^r,
// obtained by shifting q -> x - u/(2a) and using the even moments
// int x^l exp(-a x^2) dx = sqrt(pi/a) (l-1)!! / (2a)^(l/2).
std::vector<Complex> moment_poly(int i, Complex a) {
  const Complex root = std::sqrt(std::numbers::pi / a);
  std::vector<Complex> coef(i + 1, Complex(0.0));
  Complex g = root;  // G_l for even l, starting at l = 0
  for (int l = 0; l <= i; l += 2) {
    if (l > 0) g *= Complex(double(l - 1)) / (2.0 * a);
    // (-1/(2a))^(i-l)
    Complex shift = 1.0;
    for (int r = 0; r < i - l; ++r) shift *= -1.0 / (2.0 * a);
    coef[i - l] += binomial(i, l) * shift * g;
  }
  return coef;
}

std::vector<Complex> powers_of(Complex base, int count) {
  std::vector<Complex> v(count + 1, Complex(1.0));
  for (int k = 1; k <= count; ++k) v[k] = v[k - 1] * base;
  return v;
}

}  // namespace

double QuadExp::max_abs() const {
  return std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(Dq),
                   std::abs(Dp), std::abs(E)});
}

double QuadExp::dist(const QuadExp& o) const {
  return std::max({std::abs(A - o.A), std::abs(B - o.B), std::abs(C - o.C),
                   std::abs(Dq - o.Dq), std::abs(Dp - o.Dp), std::abs(E - o.E)});
}

Complex ExpPoly::eval(Complex q, Complex p) const {
  return prefactor_ * poly_.eval(q, p) * std::exp(-exponent_.form(q, p));
}

ExpPoly ExpPoly::derive(Var v, int order) const {
  ExpPoly cur = *this;
  for (int step = 0; step < order; ++step) {
    PhasePoly dform;  // derivative of the (non-negated) quadratic form
    if (v == Var::q) {
      dform = PhasePoly::monomial(1, 0, 2.0 * cur.exponent_.A);
      dform += PhasePoly::monomial(0, 1, cur.exponent_.C);
      dform += PhasePoly(cur.exponent_.Dq);
    } else {
      dform = PhasePoly::monomial(0, 1, 2.0 * cur.exponent_.B);
      dform += PhasePoly::monomial(1, 0, cur.exponent_.C);
      dform += PhasePoly(cur.exponent_.Dp);
    }
    cur.poly_ = cur.poly_.derive(v) - cur.poly_ * dform;
  }
  return cur;
}

ExpPoly ExpPoly::conjugated() const {
  return ExpPoly(std::conj(prefactor_), poly_.conjugated(), exponent_.conjugated());
}

ExpPoly operator*(const PhasePoly& a, const ExpPoly& f) {
  return ExpPoly(f.prefactor_, a * f.poly_, f.exponent_);
}

ExpPoly operator*(const ExpPoly& f, const PhasePoly& a) {
  return ExpPoly(f.prefactor_, f.poly_ * a, f.exponent_);
}

ExpPoly operator*(const ExpPoly& f, const ExpPoly& g) {
  return ExpPoly(f.prefactor_ * g.prefactor_, f.poly_ * g.poly_,
                 f.exponent_ + g.exponent_);
}

ExpPoly ExpPoly::add(const ExpPoly& other, double tol) const {
  const double scale = std::max({1.0, exponent_.max_abs(), other.exponent_.max_abs()});
  if (exponent_.dist(other.exponent_) > tol * scale)
    throw Error("ExpPoly::add: exponents differ; sum leaves the class");
  PhasePoly sum = poly_ * prefactor_ + other.poly_ * other.prefactor_;
  return ExpPoly(1.0, std::move(sum), exponent_);
}

ExpPoly ExpPoly::sub(const ExpPoly& other, double tol) const {
  return add(other * Complex(-1.0), tol);
}

bool ExpPoly::approx_equal(const ExpPoly& other, double rtol) const {
  return dist(other) <=
         rtol * std::max({1.0, exponent_.max_abs(), other.exponent_.max_abs(),
                          effective_poly().max_abs_coeff(),
                          other.effective_poly().max_abs_coeff()});
}

double ExpPoly::dist(const ExpPoly& other) const {
  // Canonical comparison: fold prefactor and the constant exponent term into
  // the polynomial, compare the remaining exponent coefficient-wise.
  QuadExp ea = exponent_, eb = other.exponent_;
  const Complex fa = prefactor_ * std::exp(-ea.E);
  const Complex fb = other.prefactor_ * std::exp(-eb.E);
  ea.E = eb.E = 0.0;
  const double dpoly = max_coeff_dist(poly_ * fa, other.poly_ * fb);
  return std::max(dpoly, ea.dist(eb));
}

GaussMoments::GaussMoments(const QuadExp& x, int max_degree, const PhysParams& params)
    : max_degree_(max_degree) {
  if (!x.integrable())
    throw NonIntegrable("GaussMoments: exponent real part is not positive definite");

  // Integrate q first; the Schur complement gives the residual Gaussian in p.
  const Complex b2 = x.B - x.C * x.C / (4.0 * x.A);
  const Complex u2 = x.Dp - x.C * x.Dq / (2.0 * x.A);
  const Complex e2 = x.E - x.Dq * x.Dq / (4.0 * x.A);
  if (b2.real() <= 0.0)
    throw NonIntegrable("GaussMoments: p-direction width is not decaying");

  // J[t] with int p^t exp(-b2 p^2 - u2 p) dp = exp(u2^2/(4 b2)) J[t].
  const int jmax = 2 * max_degree;
  const auto u2pow = powers_of(u2, jmax);
  std::vector<Complex> j(jmax + 1, Complex(0.0));
  for (int t = 0; t <= jmax; ++t) {
    const auto mom = moment_poly(t, b2);
    for (int r = 0; r <= t; ++r) j[t] += mom[r] * u2pow[r];
  }

  const Complex envelope = std::exp(-e2 + u2 * u2 / (4.0 * b2)) /
                           (2.0 * std::numbers::pi * params.hbar);
  const auto cpow = powers_of(x.C, max_degree);
  const auto dqpow = powers_of(x.Dq, max_degree);

  table_.assign(max_degree + 1, std::vector<Complex>(max_degree + 1, Complex(0.0)));
  for (int i = 0; i <= max_degree; ++i) {
    const auto mom = moment_poly(i, x.A);
    for (int jj = 0; jj <= max_degree; ++jj) {
      Complex acc = 0.0;
      for (int r = 0; r <= i; ++r) {
        if (mom[r] == Complex(0.0)) continue;
        // (C p + Dq)^r spread over powers of p
        Complex inner = 0.0;
        for (int s = 0; s <= r; ++s)
          inner += binomial(r, s) * cpow[s] * dqpow[r - s] * j[jj + s];
        acc += mom[r] * inner;
      }
      table_[i][jj] = envelope * acc;
    }
  }
}

Complex GaussMoments::integrate(const PhasePoly& poly) const {
  Complex acc = 0.0;
  for (const auto& [m, c] : poly.terms()) {
    if (m.q > max_degree_ || m.p > max_degree_)
      throw Error("GaussMoments: polynomial degree exceeds the table");
    acc += c * table_[m.q][m.p];
  }
  return acc;
}

Complex gauss_integrate(const ExpPoly& f, const PhysParams& params) {
  int maxdeg = 0;
  for (const auto& [m, c] : f.poly().terms())
    maxdeg = std::max({maxdeg, m.q, m.p});
  const GaussMoments table(f.exponent(), maxdeg, params);
  return f.prefactor() * table.integrate(f.poly());
}

ExpPoly heat_apply(Complex c, const ExpPoly& f) {
  const QuadExp& x = f.exponent();
  const Complex sigma = 1.0 + 4.0 * c * x.B;
  if (std::abs(sigma) < 1e-12)
    throw SingularWidth("heat_apply: transformed width 1 + 4cB vanishes");

  QuadExp y;
  y.A = x.A - c * x.C * x.C / sigma;
  y.B = x.B / sigma;
  y.C = x.C / sigma;
  y.Dq = x.Dq - 2.0 * c * x.C * x.Dp / sigma;
  y.Dp = x.Dp / sigma;
  y.E = x.E - c * x.Dp * x.Dp / sigma;

  // Monomials conjugate through the Gaussian via the shifted linear form
  // L = (p - 2c(Cq + Dp)) / sigma:
  //   p^k -> sum_j k!/(j!(k-2j)!) (c/sigma)^j L^(k-2j).
  PhasePoly lform = PhasePoly::monomial(0, 1, 1.0 / sigma);
  lform += PhasePoly::monomial(1, 0, -2.0 * c * x.C / sigma);
  lform += PhasePoly(-2.0 * c * x.Dp / sigma);

  int maxp = 0;
  for (const auto& [m, coeff] : f.poly().terms()) maxp = std::max(maxp, m.p);
  std::vector<PhasePoly> lpow(maxp + 1, PhasePoly(1.0));
  for (int k = 1; k <= maxp; ++k) lpow[k] = lpow[k - 1] * lform;
  const auto cspow = powers_of(c / sigma, maxp / 2 + 1);

  PhasePoly out;
  for (const auto& [m, coeff] : f.poly().terms()) {
    for (int j = 0; 2 * j <= m.p; ++j) {
      const double comb = factorial(m.p) / (factorial(j) * factorial(m.p - 2 * j));
      out += PhasePoly::monomial(m.q, 0, coeff * comb * cspow[j]) * lpow[m.p - 2 * j];
    }
  }

  return ExpPoly(f.prefactor() / std::sqrt(sigma), std::move(out), y);
}

PhasePoly heat_apply(Complex c, const PhasePoly& f) {
  PhasePoly acc = f;
  PhasePoly term = f;
  Complex scale = 1.0;
  for (int k = 1; !term.is_zero(); ++k) {
    term = term.derive(Var::p, 2);
    scale *= c / double(k);
    if (term.is_zero()) break;
    acc += term * scale;
  }
  return acc;
}

}  // namespace starq
