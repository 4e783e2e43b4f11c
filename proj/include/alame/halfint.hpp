#pragma once

// Exact half-integer rationals (denominator 1 or 2).  The band-counting and
// family-admissibility rules depend on exact integrality of combinations of
// m and l, so these are never carried as floats.

#include <stdexcept>
#include <string>
#include <string_view>

namespace alame {

struct HalfInt {
  int twice = 0;  // the stored value is twice/2

  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static constexpr HalfInt from_int(int v) { return from_twice(2 * v); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return twice / 2.0; }

  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
  friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
  friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
  friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

  // Accepts "p" or "p/q" with q in {1,2}.  Decimal notation is rejected so
  // that admissibility never rides on a floating comparison.
  static HalfInt parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("HalfInt: empty string");
    const auto slash = s.find('/');
    const auto to_int = [](std::string_view t) {
      if (t.empty()) throw std::invalid_argument("HalfInt: malformed rational");
      size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) throw std::invalid_argument("HalfInt: malformed rational");
      long v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9')
          throw std::invalid_argument("HalfInt: expected integer or p/2 rational, got '" +
                                      std::string(t) + "'");
        v = v * 10 + (t[i] - '0');
        if (v > 1000000) throw std::invalid_argument("HalfInt: out of range");
      }
      return static_cast<int>(t[0] == '-' ? -v : v);
    };
    if (slash == std::string_view::npos) return from_int(to_int(s));
    const int p = to_int(s.substr(0, slash));
    const int q = to_int(s.substr(slash + 1));
    if (q == 1) return from_int(p);
    if (q == 2) return from_twice(p);
    throw std::invalid_argument("HalfInt: denominator must be 1 or 2");
  }

  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

}  // namespace alame
