#pragma once

// Jacobi elliptic functions sn, cn, dn of real argument and real modulus
// 0 < k^2 < 1, plus the complete elliptic integral K(k).
//
// Production path: AGM ladder with descending Landen back-recursion for the
// amplitude. Templated on the scalar type because the residual checks in the
// verification layer need long-double evaluations.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace alame {

template <class T>
struct JacobiTriple {
  T sn, cn, dn;
};

namespace detail {
template <class T>
constexpr T pi_v = T(3.14159265358979323846264338327950288L);
}

// Complete elliptic integral of the first kind as a function of k^2,
// K = pi / (2 AGM(1, k')).  Quadratic convergence.
template <class T>
T complete_elliptic_K(T k2) {
  if (!(k2 >= T(0)) || k2 >= T(1))
    throw std::domain_error("complete_elliptic_K: require 0 <= k2 < 1");
  T a = T(1);
  T b = std::sqrt(T(1) - k2);
  const T eps = std::numeric_limits<T>::epsilon();
  for (int i = 0; i < 64 && std::abs(a - b) > eps * a; ++i) {
    const T an = (a + b) / T(2);
    b = std::sqrt(a * b);
    a = an;
  }
  return detail::pi_v<T> / (T(2) * a);
}

// sn, cn, dn at real x.  Argument is reduced modulo the full period 4K first;
// the AGM phase recursion then stays well inside its comfortable range.
template <class T>
JacobiTriple<T> jacobi_scd(T x, T k2) {
  if (!(k2 >= T(0)) || k2 >= T(1))
    throw std::domain_error("jacobi_scd: require 0 <= k2 < 1");
  if (!std::isfinite(x))
    throw std::domain_error("jacobi_scd: non-finite argument");
  if (k2 == T(0)) return {std::sin(x), std::cos(x), T(1)};

  const T K = complete_elliptic_K(k2);
  T y = std::fmod(x, T(4) * K);
  if (y > T(2) * K)
    y -= T(4) * K;
  else if (y < T(-2) * K)
    y += T(4) * K;

  const T kp2 = T(1) - k2;
  T a[32], c[32];
  a[0] = T(1);
  c[0] = std::sqrt(k2);
  T b = std::sqrt(kp2);
  int n = 0;
  const T eps = std::numeric_limits<T>::epsilon();
  while (n < 30 && std::abs(c[n]) > eps * a[n]) {
    a[n + 1] = (a[n] + b) / T(2);
    c[n + 1] = (a[n] - b) / T(2);
    b = std::sqrt(a[n] * b);
    ++n;
  }

  T phi = std::ldexp(a[n] * y, n);
  for (int i = n; i > 0; --i) {
    T s = c[i] / a[i] * std::sin(phi);
    if (s > T(1)) s = T(1);
    if (s < T(-1)) s = T(-1);
    phi = (phi + std::asin(s)) / T(2);
  }

  const T sn = std::sin(phi);
  const T cn = std::cos(phi);
  const T dn = std::sqrt(kp2 + k2 * cn * cn);  // dn >= k' > 0
  return {sn, cn, dn};
}

// Validated modulus bundle: k^2, k'^2 and the quarter period K(k).
struct EllipticModulus {
  double k2 = 0;
  double kprime2 = 1;
  double quarter_period = 0;

  static EllipticModulus from_k2(double k2) {
    if (!(k2 > 0.0) || k2 >= 1.0)
      throw std::domain_error("EllipticModulus: k2 must lie in (0,1)");
    EllipticModulus m;
    m.k2 = k2;
    m.kprime2 = 1.0 - k2;
    m.quarter_period = complete_elliptic_K(k2);
    return m;
  }
};

inline JacobiTriple<double> jacobi_sn_cn_dn(double x, const EllipticModulus& mod) {
  return jacobi_scd(x, mod.k2);
}

}  // namespace alame
