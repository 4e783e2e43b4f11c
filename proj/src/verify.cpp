#include "alame/verify.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace alame {

double schrodinger_residual(const WaveFn& psi, double energy,
                            const LameParameters& params,
                            const EllipticModulus& modulus, int grid_n) {
  if (grid_n < 101)
    throw std::invalid_argument("schrodinger_residual: grid_n must be >= 101");

  const long double k2 = modulus.k2;
  const long double K = complete_elliptic_K<long double>(k2);
  const long double h = 2.0L * K / (50.0L * grid_n);
  const double m = params.m.value();
  const double l = params.l.value();

  long double max_res = 0.0L, max_psi = 0.0L;
  for (int i = 0; i < grid_n; ++i) {
    // interior grid: avoids the zeros of sn where sign-function fixtures
    // are discontinuous pointwise (measure-zero, but the stencil straddles)
    const long double x = 2.0L * K * (i + 1) / (grid_n + 1);
    const long double f0 = psi(x);
    const long double f1m = psi(x - h), f1p = psi(x + h);
    const long double f2m = psi(x - 2 * h), f2p = psi(x + 2 * h);
    const long double f4m = psi(x - 4 * h), f4p = psi(x + 4 * h);
    // 5-point second derivative at spacings h and 2h, one Richardson level
    const long double d_h =
        (-f2m + 16 * f1m - 30 * f0 + 16 * f1p - f2p) / (12 * h * h);
    const long double d_2h =
        (-f4m + 16 * f2m - 30 * f0 + 16 * f2p - f4p) / (48 * h * h);
    const long double d2 = (16 * d_h - d_2h) / 15;
    const long double v = lame_potential_t<long double>(x, m, l, k2);
    const long double r = std::abs(-d2 + (v - (long double)energy) * f0);
    if (r > max_res) max_res = r;
    if (std::abs(f0) > max_psi) max_psi = std::abs(f0);
  }
  if (max_psi == 0.0L)
    throw std::invalid_argument("schrodinger_residual: sampler is identically zero");
  return static_cast<double>(max_res / max_psi);
}

namespace {

// Dormand-Prince 5(4) embedded pair on y' = f(x, y), y in R^4.
using Vec4 = std::array<double, 4>;

template <class F>
void dp54_integrate(const F& f, double x0, double x1, Vec4& y, double tol) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const auto axpy = [](Vec4& r, const Vec4& y0, double h,
                       std::initializer_list<std::pair<double, const Vec4*>> terms) {
    for (int i = 0; i < 4; ++i) {
      double s = 0;
      for (const auto& [coef, k] : terms) s += coef * (*k)[i];
      r[i] = y0[i] + h * s;
    }
  };

  double x = x0;
  double h = (x1 - x0) / 64.0;
  Vec4 k1 = f(x, y);
  int steps = 0;
  while (x < x1) {
    if (++steps > 2000000)
      throw std::runtime_error("hill_discriminant: too many integration steps");
    if (x + h > x1) h = x1 - x;
    if (h < 1e-15 * (x1 - x0))
      throw std::runtime_error("hill_discriminant: step-size underflow");

    Vec4 t, k2v, k3, k4, k5, k6, k7;
    axpy(t, y, h, {{a21, &k1}});
    k2v = f(x + c2 * h, t);
    axpy(t, y, h, {{a31, &k1}, {a32, &k2v}});
    k3 = f(x + c3 * h, t);
    axpy(t, y, h, {{a41, &k1}, {a42, &k2v}, {a43, &k3}});
    k4 = f(x + c4 * h, t);
    axpy(t, y, h, {{a51, &k1}, {a52, &k2v}, {a53, &k3}, {a54, &k4}});
    k5 = f(x + c5 * h, t);
    axpy(t, y, h, {{a61, &k1}, {a62, &k2v}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    k6 = f(x + h, t);
    Vec4 y5;
    axpy(y5, y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    k7 = f(x + h, y5);

    double err = 0;
    for (int i = 0; i < 4; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      x += h;
      y = y5;
      k1 = k7;  // FSAL
    }
    double fac = 0.9 * std::pow(err > 0 ? err : 1e-10, -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
  }
}

}  // namespace

DiscriminantSample hill_discriminant_for(const std::function<double(double)>& potential,
                                         double period, double energy, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("hill_discriminant: tol must be > 0");
  // y = (u1, u1', u2, u2'), u'' = (V - E) u, from the canonical basis.
  const auto f = [&](double x, const Vec4& y) {
    const double w = potential(x) - energy;
    return Vec4{y[1], w * y[0], y[3], w * y[2]};
  };
  Vec4 y{1, 0, 0, 1};
  dp54_integrate(f, 0.0, period, y, tol);
  DiscriminantSample s;
  s.energy = energy;
  s.delta = y[0] + y[3];
  s.monodromy_det = y[0] * y[3] - y[1] * y[2];
  return s;
}

DiscriminantSample hill_discriminant(double energy, const LameParameters& params,
                                     const EllipticModulus& modulus, double tol) {
  const auto v = [&](double x) { return lame_potential(x, params, modulus); };
  return hill_discriminant_for(v, 2.0 * modulus.quarter_period, energy, tol);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::BandEdgePeriodic: return "band_edge_periodic";
    case Classification::BandEdgeAntiperiodic: return "band_edge_antiperiodic";
    case Classification::InBandDegenerate: return "in_band_degenerate";
    default: return "inconsistent";
  }
}

std::vector<Classification> classify_spectrum(const SpectrumResult& spec, double tol) {
  std::vector<Classification> out;
  out.reserve(spec.states.size());
  for (const auto& st : spec.states) {
    const DiscriminantSample d =
        hill_discriminant(st.energy, spec.params, spec.modulus, 1e-11);
    if (std::abs(std::abs(d.delta) - 2.0) <= tol)
      out.push_back(d.delta > 0 ? Classification::BandEdgePeriodic
                                : Classification::BandEdgeAntiperiodic);
    else if (std::abs(d.delta) < 2.0 - tol && st.degeneracy == 2)
      out.push_back(Classification::InBandDegenerate);
    else
      out.push_back(Classification::Inconsistent);
  }
  return out;
}

}  // namespace alame
