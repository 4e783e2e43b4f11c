#include "alame/sl2.hpp"

#include <stdexcept>

namespace alame {

GeneratorSet build_generators(int n) {
  if (n < 0) throw std::invalid_argument("build_generators: n must be >= 0");
  const int dim = n + 1;
  GeneratorSet g;
  g.n = n;
  g.t_plus = Eigen::MatrixXd::Zero(dim, dim);
  g.t_zero = Eigen::MatrixXd::Zero(dim, dim);
  g.t_minus = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j <= n; ++j) {
    g.t_zero(j, j) = j - n / 2.0;
    if (j >= 1) g.t_minus(j - 1, j) = j;       // T- xi^j = j xi^(j-1)
    if (j <= n - 1) g.t_plus(j + 1, j) = j - n;  // T+ xi^j = (j-n) xi^(j+1)
  }
  return g;
}

BPolynomials build_b_polynomials(const AlgebraizationParams& ap) {
  const double k2 = ap.modulus.k2;
  const double kp2 = ap.modulus.kprime2;
  const double n = ap.n;
  const auto cp = ap.c_plus, cm = ap.c_minus, c0 = ap.c_zero;

  // Quadratic coefficients fixed by B4 = (1 + xi^2)(1 + k'^2 xi^2):
  // C++ = k'^2, C00 = 2 - k^2, C-- = 1, C+0 = C0- = 0.
  const double cpp = kp2, c00 = 2.0 - k2, cmm = 1.0;

  BPolynomials b;
  b.b4 = {cmm, 0.0, c00, 0.0, cpp};
  b.b3 = {cm,                       // (1-n) C0- + C-
          (1.0 - n) * c00 + c0,     // (1-n) C00 + C0
          cp,                       // 3 (1-n) C+0 + C+
          2.0 * (1.0 - n) * cpp};
  b.b2 = {n * n / 4.0 * c00 - n / 2.0 * c0 + ap.d,
          -n * cp,                  // n [(n-1) C+0 - C+]
          n * (n - 1.0) * cpp};
  return b;
}

GaugedHamiltonian build_gauged_hamiltonian(const AlgebraizationParams& ap) {
  const GeneratorSet g = build_generators(ap.n);
  const int dim = ap.n + 1;
  const double k2 = ap.modulus.k2;
  const double kp2 = ap.modulus.kprime2;

  const Eigen::MatrixXd quad = kp2 * (g.t_plus * g.t_plus) +
                               (2.0 - k2) * (g.t_zero * g.t_zero) +
                               (g.t_minus * g.t_minus);

  Eigen::MatrixXcd h = -quad.cast<std::complex<double>>();
  h -= ap.c_plus * g.t_plus.cast<std::complex<double>>();
  h -= ap.c_zero * g.t_zero.cast<std::complex<double>>();
  h -= ap.c_minus * g.t_minus.cast<std::complex<double>>();
  h -= ap.d * Eigen::MatrixXcd::Identity(dim, dim);

  return GaugedHamiltonian{ap.n, std::move(h), ap};
}

}  // namespace alame
