#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace tongue_lab {

namespace detail {

// sin(u) for u in [0, pi/2]. Templated so the batched orbit code can run
// it on vector types.
template <class T>
inline T sin_quarter(T u) noexcept {
  const T u2 = u * u;
  T p = u2 * (1.0 / 51090942171709440000.0) - 1.0 / 121645100408832000.0;
  p = p * u2 + 1.0 / 355687428096000.0;
  p = p * u2 - 1.0 / 1307674368000.0;
  p = p * u2 + 1.0 / 6227020800.0;
  p = p * u2 - 1.0 / 39916800.0;
  p = p * u2 + 1.0 / 362880.0;
  p = p * u2 - 1.0 / 5040.0;
  p = p * u2 + 1.0 / 120.0;
  p = p * u2 - 1.0 / 6.0;
  p = p * u2 + 1.0;
  return u * p;
}

// Kernel for g in [-1/2, 1/2]. Branch free: orbit fractions are close to
// uniform, so any data dependent branch here mispredicts half the time.
inline double sin_turns_folded(double g) noexcept {
  const double ag = std::fabs(g);
  const double r = std::min(ag, 0.5 - ag);
  return std::copysign(sin_quarter(6.283185307179586476925 * r), g);
}

} // namespace detail

/// sin(2*pi*x) for x measured in turns.
///
/// The argument is reduced exactly to the nearest half-integer and folded
/// onto [0, 1/4] turn, where a degree-21 Taylor polynomial is accurate to a
/// few ulp. Orbits of circle maps call this billions of times; the libm
/// sine is latency bound on the reduction path and several times slower.
inline double sin_turns(double x) noexcept {
  constexpr double two_pow_52 = 4503599627370496.0;
  if (!(std::fabs(x) < two_pow_52)) {
    // every double of that size is an integer; NaN and inf fall through
    return std::isfinite(x) ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  }
  const double nearest = static_cast<double>(static_cast<long long>(x + (x >= 0.0 ? 0.5 : -0.5)));
  return detail::sin_turns_folded(x - nearest);
}

/// sin(2*pi*x) for x already in [0, 1), as in the fractional part of an orbit.
inline double sin_turns_unit(double x) noexcept {
  return detail::sin_turns_folded(x - std::nearbyint(x));
}

/// cos(2*pi*x) for x measured in turns.
inline double cos_turns(double x) noexcept {
  if (!std::isfinite(x)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  // shift by a quarter turn after removing the integer part so the
  // addition does not lose the fractional bits of large arguments
  const double frac = x - std::floor(x);
  return sin_turns(frac + 0.25);
}

} // namespace tongue_lab
