#pragma once

// Band-edge spectra: diagonalize the gauged Hamiltonian for each admissible
// family, pull eigenvectors back through the gauge factor into pole-free
// wavefunction samplers, and merge/sort/label the states.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "alame/algebraize.hpp"
#include "alame/gauge.hpp"

namespace alame {

// Pole-free evaluator
//   psi(x) = dn^tau * exp(i * phase_imag * theta(x)) * sum_j c_j sn^j cn^(n-j),
// the cn^sigma power having been distributed into the polynomial part
// (sigma = n for every supported family).  Templated evaluation so the
// verification layer can sample in long double.
struct WaveSampler {
  int n = 0;
  double k2 = 0;
  double tau = 0;
  double phase_imag = 0;  // phase_coeff = i * phase_imag
  std::vector<std::complex<double>> coeffs;
  bool imag_part = false;  // take Im instead of Re (degenerate pairs)

  template <class T>
  std::complex<T> complex_value(T x) const {
    const auto t = jacobi_scd(x, T(k2));
    const T theta = unwrapped_theta(x, T(k2));
    const T mag = std::pow(t.dn, T(tau));
    const std::complex<T> phase(std::cos(T(phase_imag) * theta),
                                std::sin(T(phase_imag) * theta));
    // sum_j c_j sn^j cn^(n-j); n is tiny, direct accumulation is fine.
    std::complex<T> poly(0, 0);
    T snj = T(1);
    for (int j = 0; j <= n; ++j) {
      T cnp = T(1);
      for (int p = 0; p < n - j; ++p) cnp *= t.cn;
      poly += std::complex<T>(T(coeffs[j].real()), T(coeffs[j].imag())) * snj * cnp;
      snj *= t.sn;
    }
    return std::complex<T>(mag, T(0)) * phase * poly;
  }

  template <class T>
  T operator()(T x) const {
    const auto v = complex_value(x);
    return imag_part ? v.imag() : v.real();
  }
};

struct BandEdgeState {
  double energy = 0;
  int degeneracy = 1;
  Family family = Family::A;
  Eigen::VectorXcd poly_coeffs;  // normalized: largest-|.| coefficient == 1
  int label = 0;                 // index r after ascending-energy sort
  std::vector<WaveSampler> wave_samplers;
  bool pair_collapsed = false;    // degenerate pair whose two parts coincide
  bool coincident_energy = false; // |dE| < 1e-10 against another family
};

struct SpectrumResult {
  LameParameters params;
  EllipticModulus modulus;
  std::vector<BandEdgeState> states;  // ascending energy
  int total_count = 0;                // sum of degeneracies = 2m+1
};

SpectrumResult band_edge_spectrum(const LameParameters& params,
                                  const EllipticModulus& modulus);

WaveSampler wavefunction_sampler(const GaugeFactorSpec& spec,
                                 const Eigen::VectorXcd& poly_coeffs,
                                 const EllipticModulus& modulus,
                                 bool imag_part = false);

}  // namespace alame
