#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace starq::test {

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double d = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * d * d);
        break;
      }
    }
  }
}

}  // namespace

Complex quadrature_integrate(const std::function<Complex(double, double)>& f,
                             const PhysParams& params, double extent, int n) {
  static std::vector<double> nodes, weights;
  static int cached_n = 0;
  if (cached_n != n) {
    legendre_rule(n, nodes, weights);
    cached_n = n;
  }
  Complex acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double q = extent * nodes[i];
    Complex row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p = extent * nodes[j];
      row += weights[j] * f(q, p);
    }
    acc += weights[i] * row;
  }
  return acc * extent * extent / (2.0 * std::numbers::pi * params.hbar);
}

PhasePoly star_power_right_fold(const ProductKind& prod, const PhasePoly& f, int n) {
  PhasePoly acc(1.0);
  for (int i = 0; i < n; ++i) acc = star(prod, f, acc);
  return acc;
}

PhasePoly star_via_bracket_series(const ProductKind& prod, const PhasePoly& f,
                                  const PhasePoly& g) {
  PhasePoly acc = f * g;
  Complex scale = 1.0;
  const int kmax = std::max(0, std::min(f.total_degree(), g.total_degree()));
  for (int k = 1; k <= kmax; ++k) {
    scale *= Complex(0.0, prod.params.hbar / 2.0) / double(k);
    const PhasePoly bk = (prod.kind == StarKind::Moyal)
                             ? bracket_power_p(k, f, g)
                             : bracket_power_m(k, f, g, prod.params);
    acc += bk * scale;
  }
  return acc;
}

std::vector<Complex> damped_projector_values(const PhysParams& params, Complex q,
                                             Complex p, int max_level, double radius,
                                             int samples) {
  const Complex c(0.0, -params.hbar * params.m * params.gamma / 2.0);
  const auto kernel = [&](Complex s) {
    // Laguerre generating function of the undamped projectors,
    // (2/(1+s)) exp(-(2H/hbar omega)(1-s)/(1+s)), pushed through the
    // equivalence operator in closed form.
    const Complex w = (1.0 - s) / (1.0 + s);
    QuadExp x;
    x.A = params.m * params.omega / params.hbar * w;
    x.B = w / (params.m * params.omega * params.hbar);
    const ExpPoly gen(2.0 / (1.0 + s), PhasePoly(1.0), x);
    return heat_apply(c, gen).eval(q, p);
  };

  std::vector<Complex> acc(max_level + 1, Complex(0.0));
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / samples;
    const Complex s = radius * std::exp(Complex(0.0, theta));
    const Complex val = kernel(s);
    for (int n = 0; n <= max_level; ++n)
      acc[n] += val * std::exp(Complex(0.0, -theta * n));
  }
  double rpow = 1.0;
  for (int n = 0; n <= max_level; ++n) {
    acc[n] /= double(samples) * rpow;
    rpow *= radius;
  }
  return acc;
}

}  // namespace starq::test
