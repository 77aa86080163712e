#include "starq/phase_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
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

}  // namespace

PhasePoly::PhasePoly(Complex constant) {
  if (constant != Complex(0.0)) terms_[{0, 0}] = constant;
}

PhasePoly PhasePoly::variable(Var v) {
  return v == Var::q ? monomial(1, 0, 1.0) : monomial(0, 1, 1.0);
}

PhasePoly PhasePoly::monomial(int qdeg, int pdeg, Complex coeff) {
  if (qdeg < 0 || pdeg < 0) throw Error("PhasePoly: negative exponent");
  if (qdeg + pdeg > kMaxDegree)
    throw DegreeOverflow("PhasePoly: monomial degree " + std::to_string(qdeg + pdeg) +
                         " exceeds maximum " + std::to_string(kMaxDegree));
  PhasePoly r;
  if (coeff != Complex(0.0)) r.terms_[{qdeg, pdeg}] = coeff;
  return r;
}

Complex PhasePoly::coeff(int qdeg, int pdeg) const {
  auto it = terms_.find({qdeg, pdeg});
  return it == terms_.end() ? Complex(0.0) : it->second;
}

int PhasePoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

double PhasePoly::max_abs_coeff() const {
  double v = 0.0;
  for (const auto& [m, c] : terms_) v = std::max(v, std::abs(c));
  return v;
}

void PhasePoly::add_term(const Monomial& m, Complex c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

void PhasePoly::prune() {
  const double cutoff = kPruneRel * max_abs_coeff();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= cutoff)
      it = terms_.erase(it);
    else
      ++it;
  }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  prune();
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  prune();
  return *this;
}

PhasePoly& PhasePoly::operator*=(const PhasePoly& rhs) {
  const int da = total_degree();
  const int db = rhs.total_degree();
  if (da >= 0 && db >= 0 && da + db > kMaxDegree)
    throw DegreeOverflow("PhasePoly: product degree " + std::to_string(da + db) +
                         " exceeds maximum " + std::to_string(kMaxDegree));
  PhasePoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      out.add_term({ma.q + mb.q, ma.p + mb.p}, ca * cb);
  out.prune();
  terms_ = std::move(out.terms_);
  return *this;
}

PhasePoly& PhasePoly::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  prune();
  return *this;
}

PhasePoly PhasePoly::derive(Var v, int order) const {
  if (order < 0) throw Error("PhasePoly::derive: negative order");
  PhasePoly cur = *this;
  for (int step = 0; step < order; ++step) {
    PhasePoly next;
    for (const auto& [m, c] : cur.terms_) {
      if (v == Var::q && m.q > 0)
        next.add_term({m.q - 1, m.p}, c * double(m.q));
      else if (v == Var::p && m.p > 0)
        next.add_term({m.q, m.p - 1}, c * double(m.p));
    }
    cur.terms_ = std::move(next.terms_);
    if (cur.terms_.empty()) break;
  }
  return cur;
}

Complex PhasePoly::eval(Complex q, Complex p) const {
  int qmax = 0, pmax = 0;
  for (const auto& [m, c] : terms_) {
    qmax = std::max(qmax, m.q);
    pmax = std::max(pmax, m.p);
  }
  std::vector<Complex> qp(qmax + 1, 1.0), pp(pmax + 1, 1.0);
  for (int i = 1; i <= qmax; ++i) qp[i] = qp[i - 1] * q;
  for (int j = 1; j <= pmax; ++j) pp[j] = pp[j - 1] * p;
  Complex acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c * qp[m.q] * pp[m.p];
  return acc;
}

PhasePoly PhasePoly::conjugated() const {
  PhasePoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = std::conj(c);
  return r;
}

PhasePoly PhasePoly::pow(int n) const {
  if (n < 0) throw Error("PhasePoly::pow: negative exponent");
  PhasePoly acc(1.0);
  for (int i = 0; i < n; ++i) acc *= *this;
  return acc;
}

std::string PhasePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    if (m.q > 0) os << " q^" << m.q;
    if (m.p > 0) os << " p^" << m.p;
  }
  return os.str();
}

double max_coeff_dist(const PhasePoly& a, const PhasePoly& b) {
  double d = 0.0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, std::abs(c - b.coeff(m.q, m.p)));
  for (const auto& [m, c] : b.terms()) d = std::max(d, std::abs(c - a.coeff(m.q, m.p)));
  return d;
}

PhasePoly bracket_power_p(int k, const PhasePoly& f, const PhasePoly& g) {
  if (k < 1) throw Error("bracket_power_p: k must be >= 1");
  PhasePoly acc;
  for (int j = 0; j <= k; ++j) {
    const PhasePoly df = f.derive(Var::q, j).derive(Var::p, k - j);
    if (df.is_zero()) continue;
    const PhasePoly dg = g.derive(Var::q, k - j).derive(Var::p, j);
    if (dg.is_zero()) continue;
    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    acc += (df * dg) * Complex(binomial(k, j) * sign);
  }
  return acc;
}

PhasePoly bracket_power_m(int k, const PhasePoly& f, const PhasePoly& g,
                          const PhysParams& params) {
  if (k < 1) throw Error("bracket_power_m: k must be >= 1");
  const double w = -2.0 * params.gamma * params.m;
  PhasePoly acc;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; a + b <= k; ++b) {
      const int c = k - a - b;
      if (c > 0 && w == 0.0) continue;  // exact Moyal degeneracy at gamma = 0
      double coeff = factorial(k) / (factorial(a) * factorial(b) * factorial(c));
      if (b % 2 != 0) coeff = -coeff;
      for (int i = 0; i < c; ++i) coeff *= w;
      const PhasePoly df = f.derive(Var::q, a).derive(Var::p, b + c);
      if (df.is_zero()) continue;
      const PhasePoly dg = g.derive(Var::q, b).derive(Var::p, a + c);
      if (dg.is_zero()) continue;
      acc += (df * dg) * Complex(coeff);
    }
  }
  return acc;
}

}  // namespace starq
