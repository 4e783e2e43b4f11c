#pragma once

// Algebraization of the associated Lame operator
//   H = -d^2/dx^2 + m(m+1) k^2 sn^2 x + l(l+1) k^2 cn^2 x / dn^2 x.
//
// For admissible (m,l) the operator restricted to a (n+1)-dimensional
// polynomial space is equivalent to a quadratic element of sl(2,R).  Four
// parameter families realize this; each is summarized by the representation
// size n, linear coefficients C+, C-, C0 and the scalar shift d.

#include <complex>
#include <vector>

#include "alame/elliptic.hpp"
#include "alame/halfint.hpp"

namespace alame {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_id(Family f) { return static_cast<char>(f); }

enum class LameCase { Integer, HalfOdd };

struct LameParameters {
  HalfInt m, l;

  // Validates the admissibility rules: 0 <= l <= m, and either both integers
  // or m half-odd (in which case l may step by 1/2).
  static LameParameters create(HalfInt m, HalfInt l);
  LameCase lame_case() const {
    return m.is_integer() ? LameCase::Integer : LameCase::HalfOdd;
  }
};

struct AlgebraizationParams {
  Family family;
  int n;                                // representation label, >= 0
  std::complex<double> c_plus, c_minus, c_zero;
  // Quadratic coefficients are fixed by the quartic (1+xi^2)(1+k'^2 xi^2):
  // C++ = k'^2, C00 = 2-k^2, C-- = 1, all mixed terms zero.
  std::complex<double> d;
  EllipticModulus modulus;
  LameParameters source;
};

struct PotentialCoefficients {
  std::complex<double> p, q, r, s;
};

std::vector<Family> admissible_families(const LameParameters& params);

AlgebraizationParams solve_family(const LameParameters& params, Family family,
                                  const EllipticModulus& modulus);

// Coefficients of V = P sn^2 + Q sn cn + R sn cn / dn^2 + S cn^2 / dn^2
// obtained from the algebraic data; for a correct family they reproduce
// P = k^2 m(m+1), Q = R = 0, S = k^2 l(l+1).
PotentialCoefficients potential_coefficients(const AlgebraizationParams& ap);

// The associated Lame potential itself, templated for high-precision use in
// the residual checks.
template <class T>
T lame_potential_t(T x, double m, double l, T k2) {
  const auto t = jacobi_scd(x, k2);
  const T cn_over_dn = t.cn / t.dn;
  return k2 * (T(m * (m + 1)) * t.sn * t.sn +
               T(l * (l + 1)) * cn_over_dn * cn_over_dn);
}

double lame_potential(double x, const LameParameters& params,
                      const EllipticModulus& modulus);

std::complex<double> algebraic_potential_c(double x, const AlgebraizationParams& ap);
double algebraic_potential(double x, const AlgebraizationParams& ap);

}  // namespace alame
