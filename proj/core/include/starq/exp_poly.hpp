#pragma once

#include <vector>

#include "starq/phase_poly.hpp"

namespace starq {

// Complex quadratic exponent. Sign convention: the stored form describes
// exp(-(A q^2 + B p^2 + C qp + Dq q + Dp p + E)), so larger real parts of
// A and B mean faster decay.
struct QuadExp {
  Complex A = 0.0;
  Complex B = 0.0;
  Complex C = 0.0;
  Complex Dq = 0.0;
  Complex Dp = 0.0;
  Complex E = 0.0;

  // The quadratic form itself (not negated).
  Complex form(Complex q, Complex p) const {
    return A * q * q + B * p * p + C * q * p + Dq * q + Dp * p + E;
  }

  // Absolute convergence of the plane integral of exp(-form): the real part
  // of the quadratic form must be positive definite.
  bool integrable() const {
    const double ra = A.real(), rb = B.real(), rc = C.real();
    return ra > 0.0 && rb > 0.0 && 4.0 * ra * rb > rc * rc;
  }

  QuadExp operator+(const QuadExp& o) const {
    return {A + o.A, B + o.B, C + o.C, Dq + o.Dq, Dp + o.Dp, E + o.E};
  }
  QuadExp conjugated() const {
    return {std::conj(A), std::conj(B), std::conj(C),
            std::conj(Dq), std::conj(Dp), std::conj(E)};
  }
  double max_abs() const;
  double dist(const QuadExp& o) const;
};

// prefactor * poly(q,p) * exp(-exponent). The class is closed under
// d/dq, d/dp, multiplication by polynomials, pointwise products, and the
// heat operator exp(c d^2/dp^2); all states and evolution kernels live here.
class ExpPoly {
 public:
  ExpPoly() : prefactor_(1.0), poly_(1.0) {}
  ExpPoly(Complex prefactor, PhasePoly poly, QuadExp exponent)
      : prefactor_(prefactor), poly_(std::move(poly)), exponent_(exponent) {}

  // Pure polynomial embedded with a zero exponent.
  explicit ExpPoly(const PhasePoly& poly) : prefactor_(1.0), poly_(poly) {}

  Complex prefactor() const { return prefactor_; }
  const PhasePoly& poly() const { return poly_; }
  const QuadExp& exponent() const { return exponent_; }

  Complex eval(Complex q, Complex p) const;
  ExpPoly derive(Var v, int order = 1) const;
  ExpPoly conjugated() const;

  ExpPoly& operator*=(Complex s) {
    prefactor_ *= s;
    return *this;
  }
  friend ExpPoly operator*(ExpPoly f, Complex s) { return f *= s; }
  friend ExpPoly operator*(Complex s, ExpPoly f) { return f *= s; }

  // Multiplication by a polynomial and pointwise products stay in class.
  friend ExpPoly operator*(const PhasePoly& a, const ExpPoly& f);
  friend ExpPoly operator*(const ExpPoly& f, const PhasePoly& a);
  friend ExpPoly operator*(const ExpPoly& f, const ExpPoly& g);

  // Sum of two members sharing the same exponent (coefficient-wise within
  // tolerance); the prefactors are folded into the polynomial part.
  ExpPoly add(const ExpPoly& other, double tol = 1e-9) const;
  ExpPoly sub(const ExpPoly& other, double tol = 1e-9) const;

  // Polynomial part with the prefactor folded in; comparisons use this.
  PhasePoly effective_poly() const { return poly_ * prefactor_; }

  bool approx_equal(const ExpPoly& other, double rtol = 1e-10) const;
  double dist(const ExpPoly& other) const;

 private:
  Complex prefactor_;
  PhasePoly poly_;
  QuadExp exponent_;
};

// Monomial moments of a fixed Gaussian exponent against the Liouville
// measure dq dp / (2 pi hbar): integrates any polynomial of bounded degree
// in one pass over its terms once the table is built. Construction throws
// NonIntegrable if the exponent's real part is not positive definite.
class GaussMoments {
 public:
  GaussMoments(const QuadExp& x, int max_degree, const PhysParams& params);

  int max_degree() const { return max_degree_; }
  // int q^i p^j exp(-x) dmu
  Complex moment(int i, int j) const { return table_[i][j]; }
  // int poly exp(-x) dmu
  Complex integrate(const PhasePoly& poly) const;

 private:
  int max_degree_;
  std::vector<std::vector<Complex>> table_;
};

// Exact integral of f against the Liouville measure dq dp / (2 pi hbar),
// by completing the square and reducing to 1-D Gaussian moments. Throws
// NonIntegrable if the exponent's real part is not positive definite.
Complex gauss_integrate(const ExpPoly& f, const PhysParams& params);

// Closed-form action of exp(c d^2/dp^2) on the class. A pure Gaussian
// exp(-B p^2) maps to (1+4cB)^(-1/2) exp(-B p^2/(1+4cB)); polynomial
// prefactors are conjugated through the Gaussian monomial by monomial,
// which reproduces the terminating series on p-independent exponents.
// Square roots take the principal branch (cut along the negative reals);
// the semigroup law heat(c1) heat(c2) = heat(c1+c2) therefore holds as long
// as the width arguments do not wrap past the cut, which is guaranteed for
// imaginary c on widths with positive real part.
ExpPoly heat_apply(Complex c, const ExpPoly& f);

// Terminating series sum_k c^k d_p^{2k} f / k! for plain polynomials.
PhasePoly heat_apply(Complex c, const PhasePoly& f);

}  // namespace starq
