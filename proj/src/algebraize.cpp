#include "alame/algebraize.hpp"

#include <cmath>
#include <stdexcept>

namespace alame {

LameParameters LameParameters::create(HalfInt m, HalfInt l) {
  if (l.twice < 0)
    throw std::invalid_argument("LameParameters: l must be non-negative");
  if (m < l)
    throw std::invalid_argument(
        "LameParameters: require m >= l (the potential is symmetric under "
        "swapping the two strengths; use the m >= l representative)");
  if (m.is_integer() != l.is_integer() && m.is_integer())
    throw std::invalid_argument(
        "LameParameters: integer m requires integer l (no algebraization "
        "exists for mixed integer/half-odd parameters)");
  // Half-odd m admits any l in {0, 1/2, ..., m}; integer m requires integer l.
  return LameParameters{m, l};
}

std::vector<Family> admissible_families(const LameParameters& params) {
  if (params.lame_case() == LameCase::Integer) {
    std::vector<Family> fams{Family::A};
    if (params.m.twice - params.l.twice - 2 >= 0)  // n_B = m - l - 1 >= 0
      fams.push_back(Family::B);
    return fams;
  }
  return {Family::C, Family::D};
}

AlgebraizationParams solve_family(const LameParameters& params, Family family,
                                  const EllipticModulus& modulus) {
  const double m = params.m.value();
  const double l = params.l.value();
  const double k2 = modulus.k2;
  const double kp = std::sqrt(modulus.kprime2);

  AlgebraizationParams ap;
  ap.family = family;
  ap.modulus = modulus;
  ap.source = params;

  int twice_n = 0;
  switch (family) {
    case Family::A:
      twice_n = params.m.twice + params.l.twice;
      ap.c_plus = ap.c_minus = 0.0;
      ap.c_zero = k2 * (l - m);
      break;
    case Family::B:
      twice_n = params.m.twice - params.l.twice - 2;
      ap.c_plus = ap.c_minus = 0.0;
      ap.c_zero = -k2 * (l + m + 1);
      break;
    case Family::C:
      twice_n = params.m.twice - 1;
      ap.c_plus = ap.c_minus = std::complex<double>(0.0, kp * (2 * l + 1));
      ap.c_zero = -k2 * (m + 0.5);
      break;
    case Family::D:
      twice_n = params.m.twice - 1;
      ap.c_plus = ap.c_minus = std::complex<double>(0.0, -kp * (2 * l + 1));
      ap.c_zero = -k2 * (m + 0.5);
      break;
  }
  if (twice_n < 0 || twice_n % 2 != 0)
    throw std::invalid_argument("solve_family: family inadmissible for (m,l)");
  ap.n = twice_n / 2;

  const auto cp = ap.c_plus, cm = ap.c_minus, c0 = ap.c_zero;
  const double n = ap.n;
  ap.d = (cm * cm - (c0 * c0 + 2.0 * cp * cm) + (cp / kp) * (cp / kp)) /
             (4.0 * k2) -
         n * (n + 2.0) / 2.0;
  return ap;
}

PotentialCoefficients potential_coefficients(const AlgebraizationParams& ap) {
  const double k2 = ap.modulus.k2;
  const double kp2 = ap.modulus.kprime2;
  const double n = ap.n;
  const auto cp = ap.c_plus, cm = ap.c_minus, c0 = ap.c_zero;

  PotentialCoefficients pc;
  const std::complex<double> dpm = cp - cm;
  const std::complex<double> dpr = cp - kp2 * cm;
  pc.p = (k2 / 4.0) * n * (n + 2.0) - (c0 / 2.0) * (n + 1.0) +
         (c0 * c0 - dpm * dpm) / (4.0 * k2);
  pc.q = dpm * (k2 * (n + 1.0) - c0) / (2.0 * k2);
  pc.r = dpr * (k2 * (n + 1.0) + c0) / (2.0 * k2);
  pc.s = (k2 / 4.0) * n * (n + 2.0) + (c0 / 2.0) * (n + 1.0) +
         (c0 * c0 - dpr * dpr / kp2) / (4.0 * k2);
  return pc;
}

double lame_potential(double x, const LameParameters& params,
                      const EllipticModulus& modulus) {
  return lame_potential_t<double>(x, params.m.value(), params.l.value(),
                                  modulus.k2);
}

std::complex<double> algebraic_potential_c(double x, const AlgebraizationParams& ap) {
  const auto pc = potential_coefficients(ap);
  const auto t = jacobi_scd(x, ap.modulus.k2);
  const double sc = t.sn * t.cn;
  const double dn2 = t.dn * t.dn;
  return pc.p * (t.sn * t.sn) + pc.q * sc + pc.r * (sc / dn2) +
         pc.s * (t.cn * t.cn / dn2);
}

double algebraic_potential(double x, const AlgebraizationParams& ap) {
  return algebraic_potential_c(x, ap).real();
}

}  // namespace alame
