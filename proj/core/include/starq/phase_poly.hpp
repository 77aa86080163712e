#pragma once

#include <complex>
#include <map>
#include <string>

#include "starq/errors.hpp"
#include "starq/params.hpp"

namespace starq {

using Complex = std::complex<double>;

enum class Var { q, p };

struct Monomial {
  int q = 0;
  int p = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  int total() const { return q + p; }
};

// Sparse bivariate polynomial in the phase-space coordinates (q, p) with
// complex coefficients. Canonical form: no stored coefficient is exactly
// zero, and after each arithmetic operation coefficients below kPruneRel
// relative to the largest modulus are dropped.
class PhasePoly {
 public:
  static constexpr int kMaxDegree = 80;
  static constexpr double kPruneRel = 1e-14;

  using TermMap = std::map<Monomial, Complex>;

  PhasePoly() = default;
  explicit PhasePoly(Complex constant);
  explicit PhasePoly(double constant) : PhasePoly(Complex(constant, 0.0)) {}

  static PhasePoly variable(Var v);
  static PhasePoly monomial(int qdeg, int pdeg, Complex coeff);

  const TermMap& terms() const { return terms_; }
  Complex coeff(int qdeg, int pdeg) const;
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  double max_abs_coeff() const;

  PhasePoly& operator+=(const PhasePoly& rhs);
  PhasePoly& operator-=(const PhasePoly& rhs);
  PhasePoly& operator*=(const PhasePoly& rhs);
  PhasePoly& operator*=(Complex s);
  PhasePoly& operator/=(Complex s) { return (*this) *= (1.0 / s); }

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(PhasePoly a, const PhasePoly& b) { return a *= b; }
  friend PhasePoly operator*(PhasePoly a, Complex s) { return a *= s; }
  friend PhasePoly operator*(Complex s, PhasePoly a) { return a *= s; }
  friend PhasePoly operator-(PhasePoly a) { return a *= Complex(-1.0); }

  PhasePoly derive(Var v, int order = 1) const;
  Complex eval(Complex q, Complex p) const;
  PhasePoly conjugated() const;  // complex conjugate as a function of real (q, p)
  PhasePoly pow(int n) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, Complex c);
  void prune();

  TermMap terms_;
};

// Largest coefficient difference between two polynomials (union of supports).
double max_coeff_dist(const PhasePoly& a, const PhasePoly& b);

// k-th power of the canonical Poisson bidifferential operator applied to
// (f, g): sum over j of binom(k,j) (-1)^(k-j) d_q^j d_p^(k-j) f *
// d_q^(k-j) d_p^j g. k = 1 is the Poisson bracket.
PhasePoly bracket_power_p(int k, const PhasePoly& f, const PhasePoly& g);

// k-th power of the dissipative bracket P - 2*gamma*m d_p (x) d_p, expanded
// multinomially. Reduces termwise to bracket_power_p when gamma == 0.
PhasePoly bracket_power_m(int k, const PhasePoly& f, const PhasePoly& g,
                          const PhysParams& params);

}  // namespace starq
