#include "starq/scaling.hpp"

namespace starq {

namespace {

PhasePoly scale_poly(const PhasePoly& f, double sq, double sp) {
  PhasePoly out;
  for (const auto& [m, c] : f.terms()) {
    double w = 1.0;
    for (int i = 0; i < m.q; ++i) w *= sq;
    for (int j = 0; j < m.p; ++j) w *= sp;
    out += PhasePoly::monomial(m.q, m.p, c * w);
  }
  return out;
}

QuadExp scale_exp(const QuadExp& x, double sq, double sp) {
  QuadExp y;
  y.A = x.A * sq * sq;
  y.B = x.B * sp * sp;
  y.C = x.C * sq * sp;
  y.Dq = x.Dq * sq;
  y.Dp = x.Dp * sp;
  y.E = x.E;
  return y;
}

}  // namespace

PhysParams dimensionless_params(const PhysParams& params) {
  return PhysParams{1.0, 1.0, 1.0, params.gamma / params.omega};
}

PhasePoly to_dimensionless(const PhasePoly& f, const PhysParams& params) {
  const Scaling s(params);
  return scale_poly(f, s.lq, s.lp);
}

PhasePoly from_dimensionless(const PhasePoly& f, const PhysParams& params) {
  const Scaling s(params);
  return scale_poly(f, 1.0 / s.lq, 1.0 / s.lp);
}

ExpPoly to_dimensionless(const ExpPoly& f, const PhysParams& params) {
  const Scaling s(params);
  return ExpPoly(f.prefactor(), scale_poly(f.poly(), s.lq, s.lp),
                 scale_exp(f.exponent(), s.lq, s.lp));
}

ExpPoly from_dimensionless(const ExpPoly& f, const PhysParams& params) {
  const Scaling s(params);
  return ExpPoly(f.prefactor(), scale_poly(f.poly(), 1.0 / s.lq, 1.0 / s.lp),
                 scale_exp(f.exponent(), 1.0 / s.lq, 1.0 / s.lp));
}

}  // namespace starq
