#include "alame/fixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "alame/elliptic.hpp"

namespace alame {
namespace {

using LD = long double;
using Fn = std::function<LD(LD, LD)>;
using En = std::function<double(double)>;

JacobiTriple<LD> tr(LD x, LD k2) { return jacobi_scd(x, k2); }

// Smooth square-root combinations: sqrt(dn+cn) has double zeros at odd
// multiples of 2K where |.| alone would kink; the half-argument signs give
// the globally smooth branch.  sgn(0) = +1 by convention.
LD sgn(LD v) { return v < 0 ? -1.0L : 1.0L; }
LD sqrt_dn_plus_cn(LD x, LD k2) {
  const auto t = tr(x, k2);
  const auto h = tr(x / 2, k2);
  return sgn(h.cn) * std::sqrt(std::max<LD>(t.dn + t.cn, 0.0L));
}
LD sqrt_dn_minus_cn(LD x, LD k2) {
  const auto t = tr(x, k2);
  const auto h = tr(x / 2, k2);
  return sgn(h.sn) * std::sqrt(std::max<LD>(t.dn - t.cn, 0.0L));
}

Fixture make(int m2, int l2, const char* tag,
             std::vector<FixtureLevel> levels) {
  Fixture f;
  f.params = LameParameters::create(HalfInt::from_twice(m2), HalfInt::from_twice(l2));
  f.levels = std::move(levels);
  f.source_tag = tag;
  return f;
}

Fixture fixture_1_0() {
  return make(2, 0, "closed forms, m=1 l=0",
      {{[](double k2) { return k2; },
        {[](LD x, LD k2) { return tr(x, k2).dn; }}},
       {[](double) { return 1.0; },
        {[](LD x, LD k2) { return tr(x, k2).cn; }}},
       {[](double k2) { return 1.0 + k2; },
        {[](LD x, LD k2) { return tr(x, k2).sn; }}}});
}

Fixture fixture_1_1() {
  return make(2, 2, "closed forms, m=1 l=1",
      {{[](double k2) { return 2.0 + k2 - 2.0 * std::sqrt(1.0 - k2); },
        {[](LD x, LD k2) {
          const auto t = tr(x, k2);
          return t.dn + std::sqrt(1 - k2) / t.dn;
        }}},
       {[](double k2) { return 2.0 + k2 + 2.0 * std::sqrt(1.0 - k2); },
        {[](LD x, LD k2) {
          const auto t = tr(x, k2);
          return t.dn - std::sqrt(1 - k2) / t.dn;
        }}},
       {[](double) { return 4.0; },
        {[](LD x, LD k2) {
          const auto t = tr(x, k2);
          return t.sn * t.cn / t.dn;
        }}}});
}

Fixture fixture_2_0() {
  const auto s1 = [](double k2) { return std::sqrt(k2 * k2 - k2 + 1.0); };
  const auto phi = [](LD x, LD k2, LD sign) {
    const auto t = tr(x, k2);
    const LD s = std::sqrt(k2 * k2 - k2 + 1);
    return 3 * t.dn * t.dn + k2 - 2 + sign * s;
  };
  return make(4, 0, "closed forms, m=2 l=0",
      {{[=](double k2) { return 2.0 * (1.0 + k2) - 2.0 * s1(k2); },
        {[=](LD x, LD k2) { return phi(x, k2, +1); }}},
       {[](double k2) { return 1.0 + k2; },
        {[](LD x, LD k2) { const auto t = tr(x, k2); return t.cn * t.dn; }}},
       {[](double k2) { return 1.0 + 4.0 * k2; },
        {[](LD x, LD k2) { const auto t = tr(x, k2); return t.sn * t.dn; }}},
       {[](double k2) { return 4.0 + k2; },
        {[](LD x, LD k2) { const auto t = tr(x, k2); return t.sn * t.cn; }}},
       {[=](double k2) { return 2.0 * (1.0 + k2) + 2.0 * s1(k2); },
        {[=](LD x, LD k2) { return phi(x, k2, -1); }}}});
}

Fixture fixture_2_1() {
  const auto s2 = [](double k2) { return std::sqrt(4.0 - 3.0 * k2); };
  const auto s3 = [](double k2) { return std::sqrt(k2 * k2 - 5.0 * k2 + 4.0); };
  const auto phi_c = [](LD x, LD k2, LD sign) {  // cn [3dn^2 - 1 +- s2]/dn
    const auto t = tr(x, k2);
    const LD s = std::sqrt(4 - 3 * k2);
    return t.cn * (3 * t.dn * t.dn - 1 + sign * s) / t.dn;
  };
  const auto phi_s = [](LD x, LD k2, LD sign) {  // sn [3dn^2 - k'^2 +- s3]/dn
    const auto t = tr(x, k2);
    const LD s = std::sqrt(k2 * k2 - 5 * k2 + 4);
    return t.sn * (3 * t.dn * t.dn - (1 - k2) + sign * s) / t.dn;
  };
  return make(4, 2, "closed forms, m=2 l=1",
      {{[](double k2) { return 4.0 * k2; },
        {[](LD x, LD k2) { const auto t = tr(x, k2); return t.dn * t.dn; }}},
       {[=](double k2) { return 5.0 + k2 - 2.0 * s2(k2); },
        {[=](LD x, LD k2) { return phi_c(x, k2, +1); }}},
       {[=](double k2) { return 5.0 + 2.0 * k2 - 2.0 * s3(k2); },
        {[=](LD x, LD k2) { return phi_s(x, k2, +1); }}},
       {[=](double k2) { return 5.0 + k2 + 2.0 * s2(k2); },
        {[=](LD x, LD k2) { return phi_c(x, k2, -1); }}},
       {[=](double k2) { return 5.0 + 2.0 * k2 + 2.0 * s3(k2); },
        {[=](LD x, LD k2) { return phi_s(x, k2, -1); }}}});
}

Fixture fixture_2_2() {
  const auto s4 = [](double k2) { return std::sqrt(k2 * k2 - 16.0 * k2 + 16.0); };
  const auto eta = [=](double k2, double sign) { return 4.0 - k2 + sign * s4(k2); };
  const auto phi_eta = [](LD x, LD k2, LD sign) {
    const auto t = tr(x, k2);
    const LD e = 4 - k2 + sign * std::sqrt(k2 * k2 - 16 * k2 + 16);
    const LD s2v = t.sn * t.sn;
    return (1 - e * s2v + (e - k2) * s2v * s2v) / (t.dn * t.dn);
  };
  const auto phi_sc = [](LD x, LD k2, LD sign) {
    const auto t = tr(x, k2);
    const LD kp = std::sqrt(1 - k2);
    return t.sn * t.cn * (1 + (sign * kp - 1) * t.sn * t.sn) / (t.dn * t.dn);
  };
  return make(4, 4, "closed forms, m=2 l=2",
      {{[=](double k2) { return 2.0 * eta(k2, -1.0) + 4.0 * k2; },
        {[=](LD x, LD k2) { return phi_eta(x, k2, -1); }}},
       {[](double k2) { return 4.0 * (1.0 + k2); },
        {[](LD x, LD k2) {
          const auto t = tr(x, k2);
          const LD s2v = t.sn * t.sn;
          return (1 - 2 * s2v + k2 * s2v * s2v) / (t.dn * t.dn);
        }}},
       {[](double k2) { return 10.0 + k2 - 6.0 * std::sqrt(1.0 - k2); },
        {[=](LD x, LD k2) { return phi_sc(x, k2, +1); }}},
       {[](double k2) { return 10.0 + k2 + 6.0 * std::sqrt(1.0 - k2); },
        {[=](LD x, LD k2) { return phi_sc(x, k2, -1); }}},
       {[=](double k2) { return 2.0 * eta(k2, +1.0) + 4.0 * k2; },
        {[=](LD x, LD k2) { return phi_eta(x, k2, +1); }}}});
}

Fixture fixture_h_0() {  // m = 1/2, l = 0
  return make(1, 0, "closed forms, m=1/2 l=0",
      {{[](double k2) { return (1.0 + k2) / 4.0; },
        {[](LD x, LD k2) { return sqrt_dn_plus_cn(x, k2); },
         [](LD x, LD k2) { return sqrt_dn_minus_cn(x, k2); }}}});
}

Fixture fixture_h_h() {  // m = l = 1/2
  return make(1, 1, "closed forms, m=1/2 l=1/2",
      {{[](double k2) { return 1.0 + k2 / 4.0; },
        {[](LD x, LD k2) {
           const auto t = tr(x, k2);
           return t.cn / std::sqrt(t.dn);
         },
         [](LD x, LD k2) {
           const auto t = tr(x, k2);
           return t.sn / std::sqrt(t.dn);
         }}}});
}

Fixture fixture_3h_0() {  // m = 3/2, l = 0
  // The linear bracket multiplies the square root from outside; alpha with
  // the + sign pairs with e_0.
  const auto s1 = [](double k2) { return std::sqrt(k2 * k2 - k2 + 1.0); };
  const auto p1 = [](LD x, LD k2, LD asign) {
    const auto t = tr(x, k2);
    const LD alpha = (1 - k2) + asign * std::sqrt(k2 * k2 - k2 + 1);
    return sqrt_dn_plus_cn(x, k2) * (k2 * t.cn + alpha * t.dn);
  };
  const auto p2 = [](LD x, LD k2, LD asign) {
    const auto t = tr(x, k2);
    const LD alpha = (1 - k2) + asign * std::sqrt(k2 * k2 - k2 + 1);
    return sqrt_dn_minus_cn(x, k2) * (k2 * t.cn - alpha * t.dn);
  };
  return make(3, 0, "closed forms, m=3/2 l=0",
      {{[=](double k2) { return 5.0 * (1.0 + k2) / 4.0 - s1(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, +1); },
         [=](LD x, LD k2) { return p2(x, k2, +1); }}},
       {[=](double k2) { return 5.0 * (1.0 + k2) / 4.0 + s1(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, -1); },
         [=](LD x, LD k2) { return p2(x, k2, -1); }}}});
}

Fixture fixture_3h_h() {  // m = 3/2, l = 1/2
  // The lower level's degenerate pair collapses to a single function dn^{3/2}
  // (the would-be partner vanishes identically), hence one evaluator there.
  return make(3, 1, "closed forms, m=3/2 l=1/2",
      {{[](double k2) { return 9.0 * k2 / 4.0; },
        {[](LD x, LD k2) {
          const auto t = tr(x, k2);
          return t.dn * std::sqrt(t.dn);
        }}},
       {[](double k2) { return 4.0 + k2 / 4.0; },
        {[](LD x, LD k2) {
           const auto t = tr(x, k2);
           return (2 * t.sn * t.sn - 1) / std::sqrt(t.dn);
         },
         [](LD x, LD k2) {
           const auto t = tr(x, k2);
           return t.sn * t.cn / std::sqrt(t.dn);
         }}}});
}

Fixture fixture_3h_1() {  // m = 3/2, l = 1
  // Quadratic-in-dn bracket outside the root; r with the + sign pairs with
  // e_0.  Energy coefficient on k^2 is 5/4.
  const auto r = [](double k2) { return std::sqrt(k2 * k2 + 9.0 * (1.0 - k2)); };
  const auto p1 = [](LD x, LD k2, LD rsign) {
    const auto t = tr(x, k2);
    const LD rr = std::sqrt(k2 * k2 + 9 * (1 - k2));
    const LD kp2 = 1 - k2;
    return sqrt_dn_plus_cn(x, k2) *
           ((kp2 + rsign * rr) * t.dn * t.dn + k2 * t.cn * t.dn + 2 * kp2) / t.dn;
  };
  const auto p2 = [](LD x, LD k2, LD rsign) {
    const auto t = tr(x, k2);
    const LD rr = std::sqrt(k2 * k2 + 9 * (1 - k2));
    const LD kp2 = 1 - k2;
    return sqrt_dn_minus_cn(x, k2) *
           ((kp2 + rsign * rr) * t.dn * t.dn - k2 * t.cn * t.dn + 2 * kp2) / t.dn;
  };
  return make(3, 2, "closed forms, m=3/2 l=1",
      {{[=](double k2) { return 1.25 * k2 + 3.25 - r(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, +1); },
         [=](LD x, LD k2) { return p2(x, k2, +1); }}},
       {[=](double k2) { return 1.25 * k2 + 3.25 + r(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, -1); },
         [=](LD x, LD k2) { return p2(x, k2, -1); }}}});
}

Fixture fixture_3h_3h() {  // m = l = 3/2
  const auto s4 = [](double k2) { return std::sqrt(k2 * k2 - 16.0 * k2 + 16.0); };
  const auto p1 = [](LD x, LD k2, LD sign) {
    const auto t = tr(x, k2);
    const LD s = std::sqrt(k2 * k2 - 16 * k2 + 16);
    const LD phi = 3 * k2 * k2 - 20 * k2 + 16 + sign * (3 * k2 - 4) * s;
    const LD eps = 3 * k2 - 4 + sign * s;
    return t.cn * (phi * t.sn * t.sn + 2 * k2 + eps) / (t.dn * std::sqrt(t.dn));
  };
  const auto p2 = [](LD x, LD k2, LD sign) {
    const auto t = tr(x, k2);
    const LD s = std::sqrt(k2 * k2 - 16 * k2 + 16);
    const LD a = k2 * k2 + 6 * k2 - 8 + sign * (2 - k2) * s;
    const LD b = 8 - 7 * k2 - sign * s;
    return t.sn * (a * t.sn * t.sn + b) / (t.dn * std::sqrt(t.dn));
  };
  return make(3, 3, "closed forms, m=3/2 l=3/2",
      {{[=](double k2) { return 5.0 + 1.25 * k2 - s4(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, +1); },
         [=](LD x, LD k2) { return p2(x, k2, +1); }}},
       {[=](double k2) { return 5.0 + 1.25 * k2 + s4(k2); },
        {[=](LD x, LD k2) { return p1(x, k2, -1); },
         [=](LD x, LD k2) { return p2(x, k2, -1); }}}});
}

}  // namespace

std::vector<LameParameters> fixture_catalog() {
  const int pairs[][2] = {{2, 0}, {2, 2}, {4, 0}, {4, 2}, {4, 4},
                          {1, 0}, {1, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 3}};
  std::vector<LameParameters> out;
  for (const auto& p : pairs)
    out.push_back(LameParameters::create(HalfInt::from_twice(p[0]),
                                         HalfInt::from_twice(p[1])));
  return out;
}

bool has_fixture(const LameParameters& params) {
  for (const auto& p : fixture_catalog())
    if (p.m == params.m && p.l == params.l) return true;
  return false;
}

Fixture fixture_for(const LameParameters& params) {
  const int m2 = params.m.twice, l2 = params.l.twice;
  if (m2 == 2 && l2 == 0) return fixture_1_0();
  if (m2 == 2 && l2 == 2) return fixture_1_1();
  if (m2 == 4 && l2 == 0) return fixture_2_0();
  if (m2 == 4 && l2 == 2) return fixture_2_1();
  if (m2 == 4 && l2 == 4) return fixture_2_2();
  if (m2 == 1 && l2 == 0) return fixture_h_0();
  if (m2 == 1 && l2 == 1) return fixture_h_h();
  if (m2 == 3 && l2 == 0) return fixture_3h_0();
  if (m2 == 3 && l2 == 1) return fixture_3h_h();
  if (m2 == 3 && l2 == 2) return fixture_3h_1();
  if (m2 == 3 && l2 == 3) return fixture_3h_3h();
  throw std::invalid_argument("fixture_for: no closed forms for (m,l) = (" +
                              params.m.str() + "," + params.l.str() + ")");
}

}  // namespace alame
