#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace treealpha {

/// Exact weight arithmetic. All solver values, ratios, and coverage
/// fractions are kept as rationals so comparisons never depend on
/// floating-point rounding.
using Weight = boost::rational<long long>;

inline std::string to_string(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

/// Parses "p" or "p/q" (lowest terms not required on input).
inline Weight parse_weight(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Weight(std::stoll(s), 1);
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Weight(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

/// Smallest integer >= w.
inline long long ceil_weight(const Weight& w) {
  const long long q = w.numerator() / w.denominator();
  return (w.numerator() % w.denominator() != 0 && w.numerator() > 0) ? q + 1 : q;
}

/// Exact test a*a <= b for integer a against a rational b^2 avoided;
/// helper for "alpha <= 2*sqrt(k*n)" style checks: alpha^2 <= 4*k*n.
inline bool square_at_most(long long a, long long bound_sq) {
  return a * a <= bound_sq;
}

}  // namespace treealpha
