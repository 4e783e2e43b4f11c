#pragma once

// Closed-form reference spectra and eigenfunctions for the eleven (m,l)
// pairs that admit fully explicit band-edge formulas.  These are transcribed
// independently of the algebraic engine and validated by the Schrodinger
// residual alone, so engine and fixtures can arbitrate each other.

#include <functional>
#include <string>
#include <vector>

#include "alame/algebraize.hpp"

namespace alame {

struct FixtureLevel {
  std::function<double(double /*k2*/)> energy;
  // One function for simple levels, two for degenerate pairs.
  std::vector<std::function<long double(long double /*x*/, long double /*k2*/)>> functions;
};

struct Fixture {
  LameParameters params;
  std::vector<FixtureLevel> levels;  // label order e_0, e_1, ... (not
                                     // necessarily ascending at every k2)
  std::string source_tag;

  int function_count() const {
    int c = 0;
    for (const auto& lv : levels) c += static_cast<int>(lv.functions.size());
    return c;
  }
};

bool has_fixture(const LameParameters& params);
Fixture fixture_for(const LameParameters& params);
std::vector<LameParameters> fixture_catalog();

}  // namespace alame
