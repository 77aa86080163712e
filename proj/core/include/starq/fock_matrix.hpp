#pragma once

#include <vector>

#include "starq/eigensystem.hpp"

namespace starq {

// Dense complex matrix indexed by oscillator levels 0..N; the brute-force
// operator picture of a phase-space symbol.
class CoeffMatrix {
 public:
  explicit CoeffMatrix(int truncation)
      : n_(truncation), a_((truncation + 1) * (truncation + 1), Complex(0.0)) {}

  int truncation() const { return n_; }
  int size() const { return n_ + 1; }

  Complex& at(int row, int col) { return a_[row * size() + col]; }
  Complex at(int row, int col) const { return a_[row * size() + col]; }

  static CoeffMatrix identity(int truncation);

  CoeffMatrix operator*(const CoeffMatrix& rhs) const;
  CoeffMatrix operator-(const CoeffMatrix& rhs) const;
  CoeffMatrix operator*(Complex s) const;

  double max_abs() const;
  // Largest deviation from rhs, optionally ignoring the last `skip` levels
  // in both indices (truncation boundary).
  double dist(const CoeffMatrix& rhs, int skip = 0) const;
  double hermiticity_defect() const;
  // Largest entry magnitude on the last row or column.
  double boundary_tail() const;

 private:
  int n_;
  std::vector<Complex> a_;
};

// Unnormalized symbol of the dyad |n><m|: creation^(*n) * vacuum * a^(*m),
// every factor polynomial so the stars terminate. The normalized variant
// divides by the computed L2 norm.
ExpPoly dyad_symbol(const ProductKind& kind, int n, int m);
ExpPoly dyad_symbol_normalized(const ProductKind& kind, int n, int m);

// Matrix of a symbol in the level basis via the trace pairing
// entry(n, m) = int F * dyad_normalized(m, n) dmu. Gamma symbols are first
// pulled back to the Moyal picture with the inverse equivalence operator.
CoeffMatrix symbol_to_matrix(const ProductKind& kind, const Symbol& f, int truncation);

// Matrix product of the two symbol matrices; realizes the star product at
// the operator level. Non-polynomial factors must pass the decay tail test
// at the truncation boundary (TruncationTail otherwise); polynomial factors
// are banded and exempt, but corrupt a boundary band of width equal to
// their total degree.
CoeffMatrix oracle_product(const ProductKind& kind, const Symbol& f, const Symbol& g,
                           int truncation);

}  // namespace starq
