// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// Exits with the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "alame/fixtures.hpp"
#include "alame/gauge.hpp"
#include "alame/sl2.hpp"
#include "alame/spectra.hpp"
#include "alame/verify.hpp"
#include "oracles.hpp"

using namespace alame;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

LameParameters lp(int m2, int l2) {
  return LameParameters::create(HalfInt::from_twice(m2), HalfInt::from_twice(l2));
}

const double kGoldenK2[] = {0.1, 0.5, 0.9};

bool golden_energies_match(const LameParameters& params, double k2, std::string& why) {
  const auto mod = EllipticModulus::from_k2(k2);
  const auto fx = fixture_for(params);
  const auto s = band_edge_spectrum(params, mod);
  std::vector<double> expect, got;
  for (const auto& lv : fx.levels) expect.push_back(lv.energy(k2));
  for (const auto& st : s.states) got.push_back(st.energy);
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect.size() != got.size()) {
    why = "state count mismatch for m=" + params.m.str() + " l=" + params.l.str();
    return false;
  }
  for (size_t i = 0; i < got.size(); ++i) {
    const double rel = std::abs(got[i] - expect[i]) / std::max(1.0, std::abs(expect[i]));
    if (rel >= 1e-10) {
      why = "energy mismatch " + std::to_string(rel) + " at m=" + params.m.str() +
            " l=" + params.l.str() + " k2=" + std::to_string(k2);
      return false;
    }
  }
  return true;
}

void criterion_1() {
  bool ok = true;
  std::string why;
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {4, 0}, {4, 2}, {4, 4}}) {
    for (double k2 : kGoldenK2) {
      const auto params = lp(m2, l2);
      if (!golden_energies_match(params, k2, why)) { ok = false; break; }
      const auto s = band_edge_spectrum(params, EllipticModulus::from_k2(k2));
      if ((int)s.states.size() != m2 + 1 || s.total_count != m2 + 1) {
        ok = false;
        why = "count != 2m+1 at m2=" + std::to_string(m2);
        break;
      }
    }
    if (!ok) break;
  }
  report(1, "integer-case golden spectra match closed forms to 1e-10", ok, why);
}

void criterion_2() {
  bool ok = true;
  std::string why;
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{
           {1, 0}, {1, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 3}}) {
    for (double k2 : kGoldenK2) {
      const auto params = lp(m2, l2);
      if (!golden_energies_match(params, k2, why)) { ok = false; break; }
      const auto s = band_edge_spectrum(params, EllipticModulus::from_k2(k2));
      if ((int)s.states.size() != (m2 + 1) / 2) {
        ok = false;
        why = "distinct energy count != m+1/2";
        break;
      }
      for (const auto& st : s.states)
        if (st.degeneracy != 2) {
          ok = false;
          why = "degeneracy != 2";
          break;
        }
    }
    if (!ok) break;
  }
  report(2, "half-odd-case golden spectra, m+1/2 doubly degenerate levels", ok, why);
}

void criterion_3() {
  bool ok = true;
  std::string why;
  double worst = 0;
  for (double k2 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto mod = EllipticModulus::from_k2(k2);
    for (int m2 = 0; m2 <= 8 && ok; ++m2)
      for (int l2 = 0; l2 <= m2 && ok; ++l2) {
        if (m2 % 2 == 0 && l2 % 2 != 0) continue;
        const auto params = lp(m2, l2);
        const double m = m2 / 2.0, l = l2 / 2.0;
        for (Family f : admissible_families(params)) {
          const auto pc = potential_coefficients(solve_family(params, f, mod));
          const double dev =
              std::max({std::abs(pc.p - k2 * m * (m + 1)), std::abs(pc.q),
                        std::abs(pc.r), std::abs(pc.s - k2 * l * (l + 1))});
          worst = std::max(worst, dev);
          if (dev >= 1e-11) {
            ok = false;
            why = "deviation " + std::to_string(dev);
          }
        }
      }
  }
  report(3, "parameter matching below 1e-11 across the half-integer grid", ok,
         ok ? "worst deviation " + std::to_string(worst) : why);
}

void criterion_4() {
  bool ok = true;
  std::string why;
  double worst = 0;
  for (const auto& params : fixture_catalog()) {
    for (double k2 : kGoldenK2) {
      const auto mod = EllipticModulus::from_k2(k2);
      // engine states
      const auto s = band_edge_spectrum(params, mod);
      for (const auto& st : s.states)
        for (const auto& w : st.wave_samplers) {
          const WaveFn fn = [w](long double x) { return w(x); };
          const double r = schrodinger_residual(fn, st.energy, params, mod, 2001);
          worst = std::max(worst, r);
          if (r >= 1e-6) {
            ok = false;
            why = "engine residual " + std::to_string(r) + " at m=" +
                  params.m.str() + " l=" + params.l.str();
          }
        }
      // fixture transcriptions
      const auto fx = fixture_for(params);
      for (const auto& lv : fx.levels) {
        const double e = lv.energy(k2);
        for (const auto& phi : lv.functions) {
          const WaveFn fn = [phi, k2](long double x) { return phi(x, (long double)k2); };
          const double r = schrodinger_residual(fn, e, params, mod, 2001);
          worst = std::max(worst, r);
          if (r >= 1e-6) {
            ok = false;
            why = "fixture residual " + std::to_string(r);
          }
        }
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst residual %.3g", worst);
  report(4, "all engine and fixture states have residual < 1e-6", ok,
         ok ? buf : why);
}

void criterion_5() {
  bool ok = true;
  std::string why;
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {4, 0}, {4, 2}, {4, 4}}) {
    for (double k2 : kGoldenK2) {
      const auto params = lp(m2, l2);
      const auto mod = EllipticModulus::from_k2(k2);
      const auto s = band_edge_spectrum(params, mod);
      for (const auto& st : s.states) {
        const auto d = hill_discriminant(st.energy, params, mod, 1e-11);
        if (std::abs(std::abs(d.delta) - 2.0) >= 1e-6) {
          ok = false;
          why = "|delta|-2 = " + std::to_string(std::abs(d.delta) - 2.0);
        }
        if (std::abs(d.monodromy_det - 1.0) >= 1e-9) {
          ok = false;
          why = "Wronskian drift " + std::to_string(d.monodromy_det - 1.0);
        }
      }
    }
  }
  report(5, "Hill discriminant hits |delta| = 2 at every integer-case energy", ok, why);
}

void criterion_6() {
  using oracles::Rat;
  bool ok = true;
  std::string why;
  // exact commutators, n <= 30
  for (int n = 0; n <= 30 && ok; ++n) {
    const int dim = n + 1;
    std::vector<std::vector<Rat>> tp(dim, std::vector<Rat>(dim, Rat(0))), t0 = tp, tm = tp;
    for (int j = 0; j <= n; ++j) {
      t0[j][j] = Rat(2 * j - n, 2);
      if (j >= 1) tm[j - 1][j] = Rat(j);
      if (j <= n - 1) tp[j + 1][j] = Rat(j - n);
    }
    const auto mul = [&](const auto& a, const auto& b) {
      std::vector<std::vector<Rat>> c(dim, std::vector<Rat>(dim, Rat(0)));
      for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
          for (int j = 0; j < dim; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
      return c;
    };
    const auto c1 = mul(tp, tm), c2 = mul(tm, tp);
    for (int i = 0; i < dim && ok; ++i)
      for (int j = 0; j < dim && ok; ++j) {
        if (!(c1[i][j] - c2[i][j] + Rat(2) * t0[i][j] == Rat(0))) {
          ok = false;
          why = "commutator fails at n=" + std::to_string(n);
        }
      }
  }
  // operator/matrix consistency to 1e-12
  const auto mod = EllipticModulus::from_k2(0.5);
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {8, 4}}) {
    const auto params = lp(m2, l2);
    for (Family f : admissible_families(params)) {
      const auto ap = solve_family(params, f, mod);
      const auto h = build_gauged_hamiltonian(ap);
      const auto b = build_b_polynomials(ap);
      for (int j = 0; j <= ap.n; ++j) {
        std::vector<std::complex<double>> out(ap.n + 5, 0.0);
        for (int i = 0; i < 3; ++i) out[j + i] -= b.b2[i];
        if (j >= 1)
          for (int i = 0; i < 4; ++i) out[j - 1 + i] -= b.b3[i] * double(j);
        if (j >= 2)
          for (int i = 0; i < 5; ++i) out[j - 2 + i] -= b.b4[i] * double(j) * double(j - 1);
        for (int i = 0; i <= ap.n; ++i)
          if (std::abs(out[i] - h.matrix(i, j)) >= 1e-12) {
            ok = false;
            why = "operator/matrix mismatch";
          }
        for (size_t i = ap.n + 1; i < out.size(); ++i)
          if (std::abs(out[i]) >= 1e-12) {
            ok = false;
            why = "degree spill";
          }
      }
    }
  }
  report(6, "exact commutators (n <= 30) and operator/matrix consistency", ok, why);
}

void criterion_7() {
  bool ok = true;
  std::string why;
  const auto mod = EllipticModulus::from_k2(0.5);
  const double K = mod.quarter_period;
  const std::vector<std::pair<LameParameters, Family>> cases = {
      {lp(2, 0), Family::A}, {lp(4, 2), Family::A}, {lp(4, 2), Family::B},
      {lp(4, 0), Family::B}, {lp(1, 0), Family::C}, {lp(3, 2), Family::C},
      {lp(5, 3), Family::C}, {lp(1, 1), Family::D}, {lp(3, 2), Family::D},
      {lp(5, 1), Family::D}};
  for (const auto& [params, fam] : cases) {
    const auto ap = solve_family(params, fam, mod);
    const auto spec = gauge_spec(ap);
    if (gauge_factor(0.0, spec) != std::complex<double>(1.0, 0.0)) {
      ok = false;
      why = "mu(0) != 1 exactly";
    }
    for (int i = 1; i <= 8; ++i) {
      const double x = (K - 0.05) * i / 8.0;
      const auto integral = oracles::simpson_c(
          [&](double t) { return gauge_function(t, ap); }, 0.0, x, 1e-13);
      const auto ratio = gauge_factor(x, spec) / std::exp(-integral);
      if (std::abs(ratio - 1.0) > 1e-9) {
        ok = false;
        why = "quadrature ratio off by " + std::to_string(std::abs(ratio - 1.0));
      }
    }
  }
  report(7, "gauge factor matches its quadrature definition; mu(0) = 1", ok, why);
}

void criterion_8() {
  bool ok = true;
  std::string why;
  const double pi = 3.14159265358979323846;
  if (std::abs(complete_elliptic_K(0.0) - pi / 2) >= 1e-15) {
    ok = false;
    why = "K(0) != pi/2";
  }
  for (double k2 : {0.05, 0.3, 0.5, 0.7, 0.95}) {
    const auto mod = EllipticModulus::from_k2(k2);
    const double K = mod.quarter_period;
    for (int i = 0; i < 60 && ok; ++i) {
      const double x = -5.0 + 0.17 * i;
      const auto t = jacobi_sn_cn_dn(x, mod);
      if (std::abs(t.sn * t.sn + t.cn * t.cn - 1) >= 1e-13 ||
          std::abs(t.dn * t.dn + k2 * t.sn * t.sn - 1) >= 1e-13) {
        ok = false;
        why = "algebraic identity";
      }
      const auto t4 = jacobi_sn_cn_dn(x + 4 * K, mod);
      if (std::abs(t4.sn - t.sn) >= 1e-12 || std::abs(t4.cn - t.cn) >= 1e-12) {
        ok = false;
        why = "periodicity";
      }
      const double h = 1e-5;
      const auto d1 = jacobi_sn_cn_dn(x + h, mod);
      const auto d2 = jacobi_sn_cn_dn(x - h, mod);
      const auto e1 = jacobi_sn_cn_dn(x + 2 * h, mod);
      const auto e2 = jacobi_sn_cn_dn(x - 2 * h, mod);
      const auto rich = [&](double p1, double p2, double q1, double q2) {
        return (4 * (p1 - p2) / (2 * h) - (q1 - q2) / (4 * h)) / 3;
      };
      if (std::abs(rich(d1.sn, d2.sn, e1.sn, e2.sn) - t.cn * t.dn) >= 1e-8 ||
          std::abs(rich(d1.cn, d2.cn, e1.cn, e2.cn) + t.sn * t.dn) >= 1e-8 ||
          std::abs(rich(d1.dn, d2.dn, e1.dn, e2.dn) + k2 * t.sn * t.cn) >= 1e-8) {
        ok = false;
        why = "derivative identity";
      }
    }
  }
  report(8, "elliptic identity suite and K(0) = pi/2", ok, why);
}

void criterion_9() {
  bool ok = true;
  std::string why;
  for (auto [m2, l2] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {4, 2}, {1, 0}, {3, 3}}) {
    const double k2 = 0.5;
    const auto params = lp(m2, l2);
    const auto mod = EllipticModulus::from_k2(k2);
    const auto s = band_edge_spectrum(params, mod);
    for (const auto& st : s.states) {
      const auto& w = st.wave_samplers.front();
      const WaveFn fn = [w](long double x) { return w(x); };
      const double good = schrodinger_residual(fn, st.energy, params, mod, 2001);
      const double bad = schrodinger_residual(fn, st.energy + 0.1, params, mod, 2001);
      if (!(bad > 1e3 * good)) {
        ok = false;
        why = "ratio only " + std::to_string(bad / good);
      }
    }
  }
  report(9, "perturbed energies raise the residual by more than 1000x", ok, why);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
