#pragma once

// Coordinate map x <-> xi = sn x / cn x, the gauge function
// A(x) = (B4' - 2 B3)(xi) / (4 sqrt(B4(xi))), and the closed-form gauge
// factor mu = exp(-int A dx) obtained by partial fractions over
// B4 = (1 + xi^2)(1 + k'^2 xi^2):
//
//   B4' - 2 B3 = (alpha xi + beta)(1 + k'^2 xi^2) + (gamma xi + delta)(1 + xi^2)
//   mu(x) = cn^sigma dn^tau exp(arctan_coeff * arctan xi) exp(phase_coeff * theta)
//
// with sigma = alpha/4 + gamma/(4 k'^2), tau = -gamma/(4 k'^2),
// phase_coeff = -delta/(4 k'), arctan_coeff = -beta/4, and theta the
// continuous unwrapped angle with cos theta = cn/dn, sin theta = k' sn / dn.

#include <complex>

#include "alame/algebraize.hpp"
#include "alame/elliptic.hpp"

namespace alame {

struct GaugeFactorSpec {
  std::complex<double> alpha, beta, gamma, delta;
  std::complex<double> sigma, tau, phase_coeff, arctan_coeff;
  EllipticModulus modulus;
};

// Continuous angle with theta(0) = 0, theta(2K) = pi; monotone increasing
// since theta' = k'/dn > 0.
template <class T>
T unwrapped_theta(T x, T k2) {
  const T K = complete_elliptic_K(k2);
  const T j = std::floor(x / (T(2) * K) + T(0.5));
  const T y = x - T(2) * K * j;
  const auto t = jacobi_scd(y, k2);
  return detail::pi_v<T> * j + std::atan2(std::sqrt(T(1) - k2) * t.sn, t.cn);
}

double xi_of_x(double x, const EllipticModulus& modulus);

// Inverse map by adaptive quadrature of int_0^xi dt / sqrt(B4(t)); the total
// integral to infinity equals the quarter period K.
double x_of_xi(double xi, const EllipticModulus& modulus);

GaugeFactorSpec gauge_spec(const AlgebraizationParams& ap);

// The gauge function A(x) evaluated directly from the B-polynomials; used by
// the logarithmic-derivative and quadrature cross-checks.
std::complex<double> gauge_function(double x, const AlgebraizationParams& ap);

// mu(x).  Pole-free for non-negative integer sigma (the case for all
// supported families); otherwise falls back to the raw |cn|^sigma form and
// refuses evaluation within 1e-6*K of the cn zeros.
std::complex<double> gauge_factor(double x, const GaugeFactorSpec& spec);

}  // namespace alame
