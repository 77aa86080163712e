#include "starq/fock_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

namespace starq {

CoeffMatrix CoeffMatrix::identity(int truncation) {
  CoeffMatrix m(truncation);
  for (int i = 0; i <= truncation; ++i) m.at(i, i) = 1.0;
  return m;
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& rhs) const {
  CoeffMatrix out(n_);
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k) {
      const Complex v = at(i, k);
      if (v == Complex(0.0)) continue;
      for (int j = 0; j < size(); ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

CoeffMatrix CoeffMatrix::operator-(const CoeffMatrix& rhs) const {
  CoeffMatrix out(n_);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
  return out;
}

CoeffMatrix CoeffMatrix::operator*(Complex s) const {
  CoeffMatrix out(n_);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) out.at(i, j) = at(i, j) * s;
  return out;
}

double CoeffMatrix::max_abs() const {
  double v = 0.0;
  for (const Complex& c : a_) v = std::max(v, std::abs(c));
  return v;
}

double CoeffMatrix::dist(const CoeffMatrix& rhs, int skip) const {
  double v = 0.0;
  const int limit = size() - skip;
  for (int i = 0; i < limit; ++i)
    for (int j = 0; j < limit; ++j) v = std::max(v, std::abs(at(i, j) - rhs.at(i, j)));
  return v;
}

double CoeffMatrix::hermiticity_defect() const {
  double v = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      v = std::max(v, std::abs(at(i, j) - std::conj(at(j, i))));
  return v;
}

double CoeffMatrix::boundary_tail() const {
  double v = 0.0;
  for (int i = 0; i < size(); ++i) {
    v = std::max(v, std::abs(at(i, n_)));
    v = std::max(v, std::abs(at(n_, i)));
  }
  return v;
}

ExpPoly dyad_symbol(const ProductKind& kind, int n, int m) {
  if (n < 0 || m < 0 || n > 20 || m > 20)
    throw DegreeOverflow("dyad_symbol: levels must lie in 0..20");
  const PhasePoly abar = creation(kind.params);
  const PhasePoly a = annihilation(kind.params);
  ExpPoly sym = vacuum(kind);
  for (int i = 0; i < n; ++i) sym = star(kind, abar, sym);
  for (int j = 0; j < m; ++j) sym = star(kind, sym, a);
  return sym;
}

ExpPoly dyad_symbol_normalized(const ProductKind& kind, int n, int m) {
  ExpPoly sym = dyad_symbol(kind, n, m);
  const Complex n2 = l2_inner(sym, sym, kind.params);
  return sym * Complex(1.0 / std::sqrt(n2.real()));
}

namespace {

// Normalized Moyal dyad symbols for one parameter set, built incrementally
// (each entry is one star product away from its row neighbour) and shared
// across symbol_to_matrix calls.
class DyadTable {
 public:
  DyadTable(const PhysParams& params, int truncation) : n_(truncation) {
    const ProductKind moyal = ProductKind::moyal(params);
    const PhasePoly abar = creation(params);
    const PhasePoly a = annihilation(params);
    const ExpPoly vac = vacuum(moyal);
    const GaussMoments norms(vac.exponent() + vac.exponent().conjugated(),
                             4 * truncation, params);
    table_.reserve((n_ + 1) * (n_ + 1));
    ExpPoly left = vac;
    for (int row = 0; row <= n_; ++row) {
      if (row > 0) left = star(moyal, abar, left);
      ExpPoly sym = left;
      for (int col = 0; col <= n_; ++col) {
        if (col > 0) sym = star(moyal, sym, a);
        const Complex n2 = std::norm(sym.prefactor()) *
                           norms.integrate(sym.poly().conjugated() * sym.poly());
        table_.push_back(sym * Complex(1.0 / std::sqrt(n2.real())));
      }
    }
  }

  const ExpPoly& at(int row, int col) const { return table_[row * (n_ + 1) + col]; }

 private:
  int n_;
  std::vector<ExpPoly> table_;
};

std::shared_ptr<const DyadTable> dyad_table(const PhysParams& params, int truncation) {
  using Key = std::tuple<double, double, double, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const DyadTable>> cache;
  const Key key{params.m, params.omega, params.hbar, truncation};
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const DyadTable>(params, truncation);
  cache.emplace(key, table);
  return table;
}

}  // namespace

CoeffMatrix symbol_to_matrix(const ProductKind& kind, const Symbol& f, int truncation) {
  // Gamma symbols are pulled back to the Moyal picture first; the pairing
  // below is the Moyal trace pairing entry(n,m) = int F dyad(m,n) dmu.
  Symbol g = f;
  if (kind.kind == StarKind::Gamma)
    g = equivalence_transform(f, kind.params, Direction::inverse);

  Complex gpref = 1.0;
  const PhasePoly* gpoly = nullptr;
  QuadExp gexp;
  if (std::holds_alternative<PhasePoly>(g)) {
    gpoly = &std::get<PhasePoly>(g);
  } else {
    const ExpPoly& ge = std::get<ExpPoly>(g);
    gpref = ge.prefactor();
    gpoly = &ge.poly();
    gexp = ge.exponent();
  }

  const auto dyads = dyad_table(kind.params, truncation);
  const QuadExp vac_exp = vacuum(ProductKind::moyal(kind.params)).exponent();
  const GaussMoments moments(gexp + vac_exp,
                             2 * truncation + std::max(0, gpoly->total_degree()),
                             kind.params);

  CoeffMatrix out(truncation);
  for (int n = 0; n <= truncation; ++n) {
    for (int m = 0; m <= truncation; ++m) {
      const ExpPoly& dyad = dyads->at(m, n);
      Complex acc = 0.0;
      for (const auto& [mg, cg] : gpoly->terms())
        for (const auto& [md, cd] : dyad.poly().terms())
          acc += cg * cd * moments.moment(mg.q + md.q, mg.p + md.p);
      out.at(n, m) = gpref * dyad.prefactor() * acc;
    }
  }
  return out;
}

CoeffMatrix oracle_product(const ProductKind& kind, const Symbol& f, const Symbol& g,
                           int truncation) {
  const CoeffMatrix mf = symbol_to_matrix(kind, f, truncation);
  const CoeffMatrix mg = symbol_to_matrix(kind, g, truncation);
  // Polynomial symbols give banded matrices and cannot leak across the
  // truncation boundary into interior levels; Gaussian-backed symbols must
  // have decayed by the boundary.
  const double tol = 1e-9;
  if (std::holds_alternative<ExpPoly>(f) &&
      mf.boundary_tail() > tol * std::max(1.0, mf.max_abs()))
    throw TruncationTail("oracle_product: left factor carries weight at the truncation boundary");
  if (std::holds_alternative<ExpPoly>(g) &&
      mg.boundary_tail() > tol * std::max(1.0, mg.max_abs()))
    throw TruncationTail("oracle_product: right factor carries weight at the truncation boundary");
  return mf * mg;
}

}  // namespace starq
