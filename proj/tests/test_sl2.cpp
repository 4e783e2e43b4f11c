#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "alame/sl2.hpp"
#include "oracles.hpp"

using namespace alame;
using oracles::Rat;

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat zeros(int dim) { return RatMat(dim, std::vector<Rat>(dim, Rat(0))); }

// Independent exact-rational construction from the index rules, with T0
// stored as twice its value to stay integral for odd n.
struct RatGenerators {
  RatMat tp, t0, tm;
};

RatGenerators rat_generators(int n) {
  const int dim = n + 1;
  RatGenerators g{zeros(dim), zeros(dim), zeros(dim)};
  for (int j = 0; j <= n; ++j) {
    g.t0[j][j] = Rat(2 * j - n, 2);
    if (j >= 1) g.tm[j - 1][j] = Rat(j);
    if (j <= n - 1) g.tp[j + 1][j] = Rat(j - n);
  }
  return g;
}

RatMat mul(const RatMat& a, const RatMat& b) {
  const int dim = (int)a.size();
  RatMat c = zeros(dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

RatMat sub(const RatMat& a, const RatMat& b) {
  RatMat c = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

bool is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!(v == Rat(0))) return false;
  return true;
}

}  // namespace

TEST_CASE("small representations") {
  const auto g0 = build_generators(0);
  CHECK(g0.t_plus(0, 0) == 0.0);
  CHECK(g0.t_zero(0, 0) == 0.0);
  CHECK(g0.t_minus(0, 0) == 0.0);

  const auto g1 = build_generators(1);
  // T+: 1 -> -xi, xi -> 0; T0: 1 -> -1/2, xi -> xi/2; T-: 1 -> 0, xi -> 1
  CHECK(g1.t_plus(1, 0) == -1.0);
  CHECK(g1.t_plus(0, 1) == 0.0);
  CHECK(g1.t_zero(0, 0) == -0.5);
  CHECK(g1.t_zero(1, 1) == 0.5);
  CHECK(g1.t_minus(0, 1) == 1.0);

  CHECK_THROWS_AS(build_generators(-1), std::invalid_argument);
}

TEST_CASE("commutators hold exactly in rational arithmetic, n <= 30") {
  for (int n = 0; n <= 30; ++n) {
    const auto g = rat_generators(n);
    // [T+,T-] + 2 T0 = 0
    RatMat c1 = sub(mul(g.tp, g.tm), mul(g.tm, g.tp));
    for (size_t i = 0; i <= (size_t)n; ++i)
      for (size_t j = 0; j <= (size_t)n; ++j)
        c1[i][j] = c1[i][j] + Rat(2) * g.t0[i][j];
    CHECK(is_zero(c1));
    // [T0,T+] - T+ = 0 and [T0,T-] + T- = 0
    CHECK(is_zero(sub(sub(mul(g.t0, g.tp), mul(g.tp, g.t0)), g.tp)));
    RatMat c3 = sub(mul(g.t0, g.tm), mul(g.tm, g.t0));
    for (size_t i = 0; i <= (size_t)n; ++i)
      for (size_t j = 0; j <= (size_t)n; ++j) c3[i][j] = c3[i][j] + g.tm[i][j];
    CHECK(is_zero(c3));
  }
}

TEST_CASE("floating matrices match the rational construction entrywise") {
  for (int n : {1, 5, 13, 30}) {
    const auto gf = build_generators(n);
    const auto gr = rat_generators(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        CHECK(gf.t_plus(i, j) == (double)gr.tp[i][j].num / gr.tp[i][j].den);
        CHECK(gf.t_zero(i, j) == (double)gr.t0[i][j].num / gr.t0[i][j].den);
        CHECK(gf.t_minus(i, j) == (double)gr.tm[i][j].num / gr.tm[i][j].den);
      }
    // entries are exactly representable, so the double commutators vanish too
    const Eigen::MatrixXd c =
        gf.t_plus * gf.t_minus - gf.t_minus * gf.t_plus + 2.0 * gf.t_zero;
    CHECK(c.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("B polynomials") {
  const auto mod = EllipticModulus::from_k2(0.5);
  const auto params = LameParameters::create(HalfInt::from_int(1), HalfInt::from_int(0));
  const auto ap = solve_family(params, Family::A, mod);
  const auto b = build_b_polynomials(ap);

  CHECK(b.b4[0] == std::complex<double>(1.0));
  CHECK(b.b4[1] == std::complex<double>(0.0));
  CHECK(b.b4[2] == std::complex<double>(1.5));
  CHECK(b.b4[3] == std::complex<double>(0.0));
  CHECK(b.b4[4] == std::complex<double>(0.5));

  // n=1, C0=-k^2: linear coefficient (1-n)(2-k^2)+C0 = -0.5, others vanish
  CHECK(std::abs(b.b3[0]) == 0.0);
  CHECK(std::abs(b.b3[1] - std::complex<double>(-0.5)) < 1e-15);
  CHECK(std::abs(b.b3[2]) == 0.0);
  CHECK(std::abs(b.b3[3]) == 0.0);

  // constant term of B2 = n^2/4 (2-k^2) - n C0/2 + d
  const std::complex<double> expect = 0.25 * 1.5 - 0.5 * (-0.5) + ap.d;
  CHECK(std::abs(b.b2[0] - expect) < 1e-15);
}

TEST_CASE("gauged Hamiltonian instances") {
  const auto mod = EllipticModulus::from_k2(0.5);
  const auto params = LameParameters::create(HalfInt::from_int(1), HalfInt::from_int(0));

  const auto ha = build_gauged_hamiltonian(solve_family(params, Family::A, mod));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ha.matrix);
  std::vector<double> ev{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
  std::sort(ev.begin(), ev.end());
  CHECK(std::abs(ev[0] - 1.0) < 1e-12);
  CHECK(std::abs(ev[1] - 1.5) < 1e-12);
  CHECK(ha.matrix.imag().cwiseAbs().maxCoeff() == 0.0);  // real C-coefficients

  const auto hb = build_gauged_hamiltonian(solve_family(params, Family::B, mod));
  CHECK(hb.matrix.rows() == 1);
  CHECK(std::abs(hb.matrix(0, 0).real() - 0.5) < 1e-12);
}

TEST_CASE("matrix equals differential operator on monomials") {
  // -B4 p'' - B3 p' - B2 p applied to xi^j must reproduce column j, with no
  // degree spill past xi^n.
  const auto mod = EllipticModulus::from_k2(0.3);
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {6, 4}}) {
    const auto params =
        LameParameters::create(HalfInt::from_twice(m2), HalfInt::from_twice(l2));
    for (Family f : admissible_families(params)) {
      const auto ap = solve_family(params, f, mod);
      const auto h = build_gauged_hamiltonian(ap);
      const auto b = build_b_polynomials(ap);
      const int n = ap.n;
      for (int j = 0; j <= n; ++j) {
        std::vector<std::complex<double>> out(n + 5, 0.0);
        // -B2 * xi^j
        for (int i = 0; i < 3; ++i) out[j + i] -= b.b2[i];
        // -B3 * j xi^(j-1)
        if (j >= 1)
          for (int i = 0; i < 4; ++i) out[j - 1 + i] -= b.b3[i] * double(j);
        // -B4 * j(j-1) xi^(j-2)
        if (j >= 2)
          for (int i = 0; i < 5; ++i)
            out[j - 2 + i] -= b.b4[i] * double(j) * double(j - 1);
        for (int i = 0; i <= n; ++i)
          CHECK(std::abs(out[i] - h.matrix(i, j)) < 1e-12);
        for (size_t i = n + 1; i < out.size(); ++i)
          CHECK(std::abs(out[i]) < 1e-12);  // degree preservation
      }
    }
  }
}

TEST_CASE("trace identity") {
  const auto mod = EllipticModulus::from_k2(0.7);
  const auto params = LameParameters::create(HalfInt::from_int(3), HalfInt::from_int(1));
  for (Family f : admissible_families(params)) {
    const auto h = build_gauged_hamiltonian(solve_family(params, f, mod));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h.matrix);
    CHECK(std::abs(es.eigenvalues().sum() - h.matrix.trace()) < 1e-10);
  }
}
