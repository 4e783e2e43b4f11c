#pragma once

// Finite-dimensional realization of sl(2,R) on polynomials of degree <= n in
// the monomial basis {1, xi, ..., xi^n}, and the gauged Hamiltonian
//   H_G = -(C++ T+^2 + C00 T0^2 + C-- T-^2) - C+ T+ - C0 T0 - C- T- - d.

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "alame/algebraize.hpp"

namespace alame {

struct GeneratorSet {
  int n = 0;
  Eigen::MatrixXd t_plus, t_zero, t_minus;
};

// T- xi^j = j xi^(j-1),  T0 xi^j = (j - n/2) xi^j,  T+ xi^j = (j - n) xi^(j+1).
// T+ annihilates xi^n, so degree <= n is preserved with no spill.
GeneratorSet build_generators(int n);

struct BPolynomials {
  std::array<std::complex<double>, 5> b4;  // coefficients, constant term first
  std::array<std::complex<double>, 4> b3;
  std::array<std::complex<double>, 3> b2;
};

BPolynomials build_b_polynomials(const AlgebraizationParams& ap);

struct GaugedHamiltonian {
  int n = 0;
  Eigen::MatrixXcd matrix;
  AlgebraizationParams params;
};

GaugedHamiltonian build_gauged_hamiltonian(const AlgebraizationParams& ap);

}  // namespace alame
