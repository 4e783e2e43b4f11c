#include "alame/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "alame/sl2.hpp"

namespace alame {
namespace {

// Adaptive Simpson on a smooth real integrand.
template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0)
    throw std::runtime_error("adaptive quadrature did not converge");
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

bool near_integer(std::complex<double> z, int& out) {
  if (std::abs(z.imag()) > 1e-9) return false;
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > 1e-9) return false;
  out = static_cast<int>(r);
  return true;
}

}  // namespace

double xi_of_x(double x, const EllipticModulus& modulus) {
  const double K = modulus.quarter_period;
  // distance from the nearest odd multiple of K, where cn vanishes
  const double u = std::abs(std::fmod(std::abs(x), 2.0 * K) - K);
  if (u < 1e-9 * K)
    throw std::domain_error("xi_of_x: pole at odd multiple of the quarter period");
  const auto t = jacobi_sn_cn_dn(x, modulus);
  return t.sn / t.cn;
}

double x_of_xi(double xi, const EllipticModulus& modulus) {
  if (!std::isfinite(xi)) throw std::domain_error("x_of_xi: non-finite argument");
  const double kp2 = modulus.kprime2;
  const double s = xi < 0 ? -1.0 : 1.0;
  const double a = std::abs(xi);
  const auto direct = [&](double t) {
    return 1.0 / std::sqrt((1.0 + t * t) * (1.0 + kp2 * t * t));
  };
  // For the tail beyond |xi| = 1 substitute u = 1/t, which maps it to the
  // regular integrand 1/sqrt((u^2+1)(u^2+k'^2)) on a finite interval.
  const auto tail = [&](double u) {
    return 1.0 / std::sqrt((u * u + 1.0) * (u * u + kp2));
  };
  double r;
  if (a <= 1.0) {
    r = adaptive_simpson(direct, 0.0, a, 1e-13);
  } else {
    r = adaptive_simpson(direct, 0.0, 1.0, 1e-13) +
        adaptive_simpson(tail, 1.0 / a, 1.0, 1e-13);
  }
  return s * r;
}

GaugeFactorSpec gauge_spec(const AlgebraizationParams& ap) {
  const double kp2 = ap.modulus.kprime2;
  const double kp = std::sqrt(kp2);
  const BPolynomials b = build_b_polynomials(ap);

  // rhs = B4' - 2 B3 as a cubic, constant term first
  std::array<std::complex<double>, 4> rhs{
      b.b4[1] - 2.0 * b.b3[0], 2.0 * b.b4[2] - 2.0 * b.b3[1],
      3.0 * b.b4[3] - 2.0 * b.b3[2], 4.0 * b.b4[4] - 2.0 * b.b3[3]};

  // (alpha xi + beta)(1 + k'^2 xi^2) + (gamma xi + delta)(1 + xi^2) = rhs
  Eigen::Matrix4cd sys = Eigen::Matrix4cd::Zero();
  // columns: alpha, beta, gamma, delta; rows: xi^0 .. xi^3
  sys(0, 1) = 1.0;  sys(0, 3) = 1.0;
  sys(1, 0) = 1.0;  sys(1, 2) = 1.0;
  sys(2, 1) = kp2;  sys(2, 3) = 1.0;
  sys(3, 0) = kp2;  sys(3, 2) = 1.0;
  // determinant is (k'^2 - 1)^2 which is nonzero for every k^2 in (0,1)
  if (std::abs(kp2 - 1.0) < 1e-300)
    throw std::logic_error("gauge_spec: singular partial-fraction system");
  Eigen::Vector4cd v;
  v << rhs[0], rhs[1], rhs[2], rhs[3];
  const Eigen::Vector4cd sol = sys.fullPivLu().solve(v);

  GaugeFactorSpec spec;
  spec.alpha = sol(0);
  spec.beta = sol(1);
  spec.gamma = sol(2);
  spec.delta = sol(3);
  spec.sigma = spec.alpha / 4.0 + spec.gamma / (4.0 * kp2);
  spec.tau = -spec.gamma / (4.0 * kp2);
  spec.phase_coeff = -spec.delta / (4.0 * kp);
  spec.arctan_coeff = -spec.beta / 4.0;
  spec.modulus = ap.modulus;
  return spec;
}

std::complex<double> gauge_function(double x, const AlgebraizationParams& ap) {
  const BPolynomials b = build_b_polynomials(ap);
  const double xi = xi_of_x(x, ap.modulus);
  const auto poly3 = [&](const std::array<std::complex<double>, 4>& c) {
    return ((c[3] * xi + c[2]) * xi + c[1]) * xi + c[0];
  };
  std::array<std::complex<double>, 4> b4d{b.b4[1], 2.0 * b.b4[2], 3.0 * b.b4[3],
                                          4.0 * b.b4[4]};
  const std::complex<double> num = poly3(b4d) - 2.0 * poly3(b.b3);
  const double b4 = (1.0 + xi * xi) * (1.0 + ap.modulus.kprime2 * xi * xi);
  return num / (4.0 * std::sqrt(b4));
}

std::complex<double> gauge_factor(double x, const GaugeFactorSpec& spec) {
  const double k2 = spec.modulus.k2;
  const double K = spec.modulus.quarter_period;
  const auto t = jacobi_sn_cn_dn(x, spec.modulus);
  const double theta = unwrapped_theta(x, k2);

  std::complex<double> mu =
      std::pow(std::complex<double>(t.dn, 0.0), spec.tau) *
      std::exp(spec.phase_coeff * theta);

  int si = 0;
  if (near_integer(spec.sigma, si) && si >= 0) {
    double cnp = 1.0;
    for (int i = 0; i < si; ++i) cnp *= t.cn;
    mu *= cnp;
    if (std::abs(spec.arctan_coeff) > 1e-12) {
      const double xi = xi_of_x(x, spec.modulus);  // throws near poles
      mu *= std::exp(spec.arctan_coeff * std::atan(xi));
    }
    return mu;
  }

  // Raw form: |cn|^sigma with the sign tracked by theta; refuse evaluation
  // too close to the cn zeros where the non-integer power branches.
  const double u = std::abs(std::fmod(std::abs(x), 2.0 * K) - K);
  if (u < 1e-6 * K)
    throw std::domain_error("gauge_factor: raw form undefined near odd multiples of K");
  const double xi = t.sn / t.cn;
  mu *= std::pow(std::complex<double>(std::abs(t.cn), 0.0), spec.sigma);
  mu *= std::exp(spec.arctan_coeff * std::atan(xi));
  return mu;
}

}  // namespace alame
