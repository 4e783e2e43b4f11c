#include "alame/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alame/sl2.hpp"

namespace alame {
namespace {

struct RawState {
  double energy;
  Family family;
  Eigen::VectorXcd coeffs;  // normalized
  int parity;               // 0 even powers, 1 odd powers, 2 mixed
};

// Normalize so that the largest-magnitude coefficient is exactly 1 (real,
// non-negative); removes the eigensolver's arbitrary phase.
Eigen::VectorXcd normalize_coeffs(const Eigen::VectorXcd& v) {
  int imax = 0;
  double best = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (best <= 0.0) throw std::runtime_error("zero eigenvector");
  return v / v(imax);
}

int coeff_parity(const Eigen::VectorXcd& v) {
  bool even = false, odd = false;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) ((i % 2 == 0) ? even : odd) = true;
  }
  if (even && odd) return 2;
  return odd ? 1 : 0;
}

std::vector<RawState> diagonalize_family(const AlgebraizationParams& ap) {
  const GaugedHamiltonian hg = build_gauged_hamiltonian(ap);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(hg.matrix);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("band_edge_spectrum: eigensolver failed");

  const double hnorm = hg.matrix.norm();
  const int dim = ap.n + 1;

  // Eigenvalue residual contract per pair.
  for (int i = 0; i < dim; ++i) {
    const auto v = es.eigenvectors().col(i);
    const double res = (hg.matrix * v - es.eigenvalues()(i) * v).norm();
    if (res > 1e-10 * std::max(1.0, hnorm))
      throw std::runtime_error("band_edge_spectrum: eigenpair residual too large");
  }

  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return es.eigenvalues()(a).real() < es.eigenvalues()(b).real();
  });

  // Re-orthogonalize within numerically coincident eigenvalue clusters.
  Eigen::MatrixXcd vecs(dim, dim);
  for (int i = 0; i < dim; ++i) vecs.col(i) = es.eigenvectors().col(order[i]);
  for (int i = 1; i < dim; ++i) {
    const double ei = es.eigenvalues()(order[i]).real();
    for (int j = i - 1; j >= 0; --j) {
      const double ej = es.eigenvalues()(order[j]).real();
      if (std::abs(ei - ej) > 1e-8 * std::max(1.0, std::abs(ei))) break;
      vecs.col(i) -= vecs.col(j) * (vecs.col(j).adjoint() * vecs.col(i))(0) /
                     vecs.col(j).squaredNorm();
    }
  }

  std::vector<RawState> out;
  out.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> lam = es.eigenvalues()(order[i]);
    if (std::abs(lam.imag()) > 1e-9 * std::max(1.0, std::abs(lam)))
      throw std::runtime_error(
          "band_edge_spectrum: eigenvalue has non-negligible imaginary part");
    RawState rs;
    rs.energy = lam.real();
    rs.family = ap.family;
    rs.coeffs = normalize_coeffs(vecs.col(i));
    rs.parity = coeff_parity(rs.coeffs);
    out.push_back(std::move(rs));
  }
  return out;
}

}  // namespace

WaveSampler wavefunction_sampler(const GaugeFactorSpec& spec,
                                 const Eigen::VectorXcd& poly_coeffs,
                                 const EllipticModulus& modulus,
                                 bool imag_part) {
  const double sre = spec.sigma.real();
  const int n = static_cast<int>(std::round(sre));
  if (std::abs(spec.sigma.imag()) > 1e-9 || std::abs(sre - n) > 1e-9 || n < 0 ||
      n + 1 != poly_coeffs.size())
    throw std::invalid_argument(
        "wavefunction_sampler: cn exponent must be the non-negative integer "
        "matching the coefficient vector length");
  if (std::abs(spec.tau.imag()) > 1e-9)
    throw std::invalid_argument("wavefunction_sampler: complex dn exponent");
  if (std::abs(spec.phase_coeff.real()) > 1e-9)
    throw std::invalid_argument("wavefunction_sampler: phase coefficient must be imaginary");
  if (std::abs(spec.arctan_coeff) > 1e-9)
    throw std::invalid_argument(
        "wavefunction_sampler: arctan term unsupported (arises only off the "
        "supported families, where C+ != C-)");

  WaveSampler s;
  s.n = n;
  s.k2 = modulus.k2;
  s.tau = spec.tau.real();
  s.phase_imag = spec.phase_coeff.imag();
  s.coeffs.resize(n + 1);
  for (int j = 0; j <= n; ++j) s.coeffs[j] = poly_coeffs(j);
  s.imag_part = imag_part;
  return s;
}

SpectrumResult band_edge_spectrum(const LameParameters& params,
                                  const EllipticModulus& modulus) {
  SpectrumResult result;
  result.params = params;
  result.modulus = modulus;

  if (params.lame_case() == LameCase::Integer) {
    for (Family f : admissible_families(params)) {
      const AlgebraizationParams ap = solve_family(params, f, modulus);
      const GaugeFactorSpec spec = gauge_spec(ap);
      for (auto& rs : diagonalize_family(ap)) {
        BandEdgeState st;
        st.energy = rs.energy;
        st.degeneracy = 1;
        st.family = rs.family;
        st.poly_coeffs = rs.coeffs;
        st.wave_samplers = {wavefunction_sampler(spec, rs.coeffs, modulus)};
        st.pair_collapsed = false;
        result.states.push_back(std::move(st));
      }
    }
  } else {
    // Case 2: compute family C; family D is its complex conjugate and shares
    // the (real) energies, verified below.  Each level is doubly degenerate
    // with real samplers Re(psi) and Im(psi).
    const AlgebraizationParams ap = solve_family(params, Family::C, modulus);
    const GaugeFactorSpec spec = gauge_spec(ap);
    const auto c_states = diagonalize_family(ap);

    const AlgebraizationParams apd = solve_family(params, Family::D, modulus);
    const auto d_states = diagonalize_family(apd);
    if (d_states.size() != c_states.size())
      throw std::runtime_error("band_edge_spectrum: C/D family size mismatch");
    for (size_t i = 0; i < c_states.size(); ++i) {
      const double scale = std::max(1.0, std::abs(c_states[i].energy));
      if (std::abs(c_states[i].energy - d_states[i].energy) > 1e-10 * scale)
        throw std::runtime_error("band_edge_spectrum: C/D energies disagree");
    }

    const double K = modulus.quarter_period;
    for (const auto& rs : c_states) {
      BandEdgeState st;
      st.energy = rs.energy;
      st.degeneracy = 2;
      st.family = Family::C;
      st.poly_coeffs = rs.coeffs;
      WaveSampler re = wavefunction_sampler(spec, rs.coeffs, modulus, false);
      WaveSampler im = wavefunction_sampler(spec, rs.coeffs, modulus, true);
      // Detect a collapsed pair (the two parts linearly dependent because one
      // vanishes identically); keep the algebraic degeneracy but emit only
      // the surviving sampler.
      double max_re = 0.0, max_im = 0.0;
      for (int i = 0; i <= 64; ++i) {
        const double x = 2.0 * K * i / 64.0;
        max_re = std::max(max_re, std::abs(re(x)));
        max_im = std::max(max_im, std::abs(im(x)));
      }
      const double floor = 1e-9 * std::max(max_re, max_im);
      if (max_im < floor) {
        st.wave_samplers = {re};
        st.pair_collapsed = true;
      } else if (max_re < floor) {
        st.wave_samplers = {im};
        st.pair_collapsed = true;
      } else {
        st.wave_samplers = {re, im};
      }
      result.states.push_back(std::move(st));
    }
  }

  std::stable_sort(result.states.begin(), result.states.end(),
                   [](const BandEdgeState& a, const BandEdgeState& b) {
                     if (a.energy != b.energy) return a.energy < b.energy;
                     if (a.family != b.family) return family_id(a.family) < family_id(b.family);
                     return coeff_parity(a.poly_coeffs) < coeff_parity(b.poly_coeffs);
                   });

  result.total_count = 0;
  for (size_t i = 0; i < result.states.size(); ++i) {
    result.states[i].label = static_cast<int>(i);
    result.total_count += result.states[i].degeneracy;
    for (size_t j = i + 1; j < result.states.size(); ++j) {
      if (result.states[j].family == result.states[i].family) continue;
      const double scale = std::max(1.0, std::abs(result.states[i].energy));
      if (std::abs(result.states[j].energy - result.states[i].energy) < 1e-10 * scale) {
        result.states[i].coincident_energy = true;
        result.states[j].coincident_energy = true;
      }
    }
  }
  return result;
}

}  // namespace alame
