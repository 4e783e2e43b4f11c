#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alame/fixtures.hpp"
#include "alame/verify.hpp"

using namespace alame;

TEST_CASE("catalog") {
  const auto cat = fixture_catalog();
  CHECK(cat.size() == 11);
  for (const auto& p : cat) CHECK(has_fixture(p));
  CHECK_FALSE(has_fixture(
      LameParameters::create(HalfInt::from_int(3), HalfInt::from_int(0))));
  CHECK_THROWS_AS(fixture_for(LameParameters::create(HalfInt::from_int(3),
                                                     HalfInt::from_int(0))),
                  std::invalid_argument);
}

TEST_CASE("function counts") {
  for (const auto& p : fixture_catalog()) {
    const auto fx = fixture_for(p);
    const int expected = p.m.twice + 1;  // 2m + 1
    if (p.m.twice == 3 && p.l.twice == 1) {
      // (3/2,1/2): the lower degenerate pair collapses to a single function,
      // so only 3 of the nominal 4 are distinct.
      CHECK(fx.function_count() == 3);
    } else {
      CHECK(fx.function_count() == expected);
    }
    if (p.lame_case() == LameCase::Integer) {
      CHECK((int)fx.levels.size() == expected);
      for (const auto& lv : fx.levels) CHECK(lv.functions.size() == 1);
    } else {
      CHECK((int)fx.levels.size() == (p.m.twice + 1) / 2);  // m + 1/2 levels
    }
  }
}

TEST_CASE("every transcription passes the residual arbiter") {
  // Residual < 1e-7 certifies the closed forms independently of the
  // algebraic engine.
  for (double k2 : {0.1, 0.5, 0.9}) {
    const auto mod = EllipticModulus::from_k2(k2);
    for (const auto& p : fixture_catalog()) {
      const auto fx = fixture_for(p);
      for (size_t lv = 0; lv < fx.levels.size(); ++lv) {
        const double e = fx.levels[lv].energy(k2);
        for (const auto& phi : fx.levels[lv].functions) {
          const WaveFn fn = [phi, k2](long double x) {
            return phi(x, (long double)k2);
          };
          const double r = schrodinger_residual(fn, e, p, mod, 501);
          INFO("fixture ", fx.source_tag, " level ", lv, " k2 ", k2);
          CHECK(r < 1e-7);
        }
      }
    }
  }
}
