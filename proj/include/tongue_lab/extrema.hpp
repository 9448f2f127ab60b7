#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tongue_lab {

struct PeriodicExtrema {
  double min_value = 0.0;
  double argmin = 0.0;
  double max_value = 0.0;
  double argmax = 0.0;
};

enum class ExtremaSides { Min, Max, Both };

namespace detail {

inline double wrap_unit(double x) {
  double w = x - std::floor(x);
  return w >= 1.0 ? 0.0 : w;
}

// Golden-section search for the maximum of sign*f on [lo, hi].
template <class Fn>
void golden_refine(const Fn& f, double lo, double hi, double sign, double x_tol,
                   double& best_x, double& best_value) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sign * f(x1);
  double f2 = sign * f(x2);
  while (hi - lo > x_tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sign * f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sign * f(x2);
    }
  }
  const double x = f1 >= f2 ? x1 : x2;
  const double v = std::max(f1, f2);
  if (v > sign * best_value) {
    best_x = x;
    best_value = sign * v;
  }
}

} // namespace detail

/// Global extrema of a 1-periodic function over [0, 1).
///
/// Scans a uniform grid, then runs golden-section refinement in the two
/// cells adjacent to each of the three best grid points. `grid` should be
/// large against the number of oscillations of `f` per period.
template <class Fn>
PeriodicExtrema periodic_extrema(const Fn& f, int grid, ExtremaSides sides = ExtremaSides::Both,
                                 double x_tol = 1e-12) {
  const std::size_t n = static_cast<std::size_t>(std::max(grid, 3));
  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = f(static_cast<double>(i) * h);
  }

  PeriodicExtrema out;
  auto refine = [&](double sign, double& best_x, double& best_value) {
    std::array<std::size_t, 3> order{0, 0, 0};
    std::array<double, 3> top{-HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
    for (std::size_t i = 0; i < n; ++i) {
      const double v = sign * values[i];
      if (v > top[2]) {
        std::size_t slot = 2;
        while (slot > 0 && v > top[slot - 1]) {
          top[slot] = top[slot - 1];
          order[slot] = order[slot - 1];
          --slot;
        }
        top[slot] = v;
        order[slot] = i;
      }
    }
    best_x = static_cast<double>(order[0]) * h;
    best_value = values[order[0]];
    for (std::size_t j = 0; j < 3; ++j) {
      const double center = static_cast<double>(order[j]) * h;
      detail::golden_refine(f, center - h, center + h, sign, x_tol, best_x, best_value);
    }
    best_x = detail::wrap_unit(best_x);
  };

  if (sides != ExtremaSides::Min) {
    refine(1.0, out.argmax, out.max_value);
  }
  if (sides != ExtremaSides::Max) {
    refine(-1.0, out.argmin, out.min_value);
  }
  if (sides == ExtremaSides::Min) {
    out.max_value = out.min_value;
    out.argmax = out.argmin;
  } else if (sides == ExtremaSides::Max) {
    out.min_value = out.max_value;
    out.argmin = out.argmax;
  }
  return out;
}

} // namespace tongue_lab
