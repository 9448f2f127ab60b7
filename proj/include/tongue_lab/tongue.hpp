#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/extrema.hpp"
#include "tongue_lab/parallel.hpp"

namespace tongue_lab {

struct TongueOptions {
  int grid = 1024;
  double classify_tol = 1e-10;
  double bisect_tol = 1e-13;
  // When false, boundary_at accepts any finite a. The roots of max G and
  // min G still bound the parameters where F^q - p has a fixed point, but
  // F is no longer a circle homeomorphism there.
  bool enforce_range = true;
};

inline void require_coprime(long long p, long long q) {
  if (q < 1) {
    throw ConfigError("q must be a positive integer");
  }
  if (std::gcd(std::llabs(p), q) != 1) {
    throw NonCoprime(std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
}

/// G(x) = F^q(x) - x - p.
inline double displacement(const FamilySpec& fam, long long p, long long q, ParamPoint pt, double x) {
  double y = x;
  for (long long i = 0; i < q; ++i) {
    y = y + pt.t + fam.perturbation(pt.a, y);
  }
  return (y - x) - static_cast<double>(p);
}

/// G'(x) = (F^q)'(x) - 1.
inline double displacement_dx(const FamilySpec& fam, long long q, ParamPoint pt, double x) {
  double y = x;
  double d = 1.0;
  for (long long i = 0; i < q; ++i) {
    d *= 1.0 + fam.perturbation_dx(pt.a, y);
    y = y + pt.t + fam.perturbation(pt.a, y);
  }
  return d - 1.0;
}

struct ExtremumReport {
  double t = 0.0;
  double a = 0.0;
  double min_G = 0.0;
  double argmin = 0.0;
  double max_G = 0.0;
  double argmax = 0.0;
};

namespace detail {

inline ExtremumReport g_extrema_unchecked(const FamilySpec& fam, long long p, long long q, double t, double a,
                                         int grid, ExtremaSides sides) {
  if (grid < 64) {
    throw ConfigError("extremum grid must have at least 64 points");
  }
  const ParamPoint pt{t, a};
  const auto ext = periodic_extrema([&](double x) { return displacement(fam, p, q, pt, x); }, grid, sides);
  return {t, a, ext.min_value, ext.argmin, ext.max_value, ext.argmax};
}

} // namespace detail

/// Extrema of G over one period: grid scan plus golden-section refinement.
inline ExtremumReport g_extrema(const FamilySpec& fam, long long p, long long q, double t, double a,
                                int grid = 1024, ExtremaSides sides = ExtremaSides::Both) {
  require_coprime(p, q);
  fam.require(a);
  return detail::g_extrema_unchecked(fam, p, q, t, a, grid, sides);
}

enum class TonguePosition { Below, LeftBoundary, Interior, RightBoundary, Above };

inline const char* to_string(TonguePosition pos) {
  switch (pos) {
    case TonguePosition::Below: return "below";
    case TonguePosition::LeftBoundary: return "left-boundary";
    case TonguePosition::Interior: return "interior";
    case TonguePosition::RightBoundary: return "right-boundary";
    case TonguePosition::Above: return "above";
  }
  return "unknown";
}

inline TonguePosition classify(const FamilySpec& fam, long long p, long long q, double t, double a,
                               const TongueOptions& opts = {}) {
  const auto r = g_extrema(fam, p, q, t, a, opts.grid);
  const double tol = opts.classify_tol;
  if (r.max_G < -tol) return TonguePosition::Below;
  if (r.min_G > tol) return TonguePosition::Above;
  if (std::fabs(r.max_G) <= tol && r.min_G < -tol) return TonguePosition::LeftBoundary;
  if (std::fabs(r.min_G) <= tol && r.max_G > tol) return TonguePosition::RightBoundary;
  if (r.min_G < -tol && r.max_G > tol) return TonguePosition::Interior;
  // |min_G|, |max_G| <= tol: G vanishes identically to tolerance, so t is
  // on both boundaries at once (a = 0 or a degenerate tongue)
  return TonguePosition::LeftBoundary;
}

inline bool in_closed_tongue(TonguePosition pos) {
  return pos == TonguePosition::LeftBoundary || pos == TonguePosition::Interior ||
         pos == TonguePosition::RightBoundary;
}

struct TongueSample {
  long long p = 0;
  long long q = 1;
  double a = 0.0;
  double t_left = 0.0;
  double t_right = 0.0;
  double x_left = 0.0;
  double x_right = 0.0;
  double width = 0.0;
};

namespace detail {

// Root of an increasing function by bisection; the bracket must straddle 0.
template <class Fn>
double bisect_increasing(const Fn& f, double lo, double hi, double tol, const char* what, double a) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo <= 0.0) || !(f_hi >= 0.0)) {
    throw BracketFailure(std::string(what) + " not bracketed at a = " + std::to_string(a) + ": G(" +
                         std::to_string(lo) + ") = " + std::to_string(f_lo) + ", G(" + std::to_string(hi) +
                         ") = " + std::to_string(f_hi));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace detail

/// Left and right boundaries of the p/q tongue at parameter a.
///
/// The left boundary is the root of t -> max G and the right boundary the
/// root of t -> min G; both maps increase with slope at least 1, so
/// bisection from the bracket [p/q - max P, p/q - min P] (P the perturbation
/// at this a, padded slightly) converges unconditionally.
inline TongueSample boundary_at(const FamilySpec& fam, long long p, long long q, double a,
                                const TongueOptions& opts = {}) {
  require_coprime(p, q);
  if (opts.enforce_range && !(a > 0.95 * fam.a_min() && a < 0.95 * fam.a_max())) {
    throw ParameterOutOfRange("a = " + std::to_string(a) + " outside the solver range (0.95 a_min, 0.95 a_max)");
  }
  if (!std::isfinite(a)) {
    throw ParameterOutOfRange("a must be finite");
  }
  const double center = static_cast<double>(p) / static_cast<double>(q);
  TongueSample s;
  s.p = p;
  s.q = q;
  s.a = a;
  if (a == 0.0) {
    s.t_left = s.t_right = center;
    return s;
  }

  const auto pert = periodic_extrema([&](double x) { return fam.perturbation(a, x); }, opts.grid);
  const double pad = 1e-9 + 1e-9 * std::fabs(center);
  const double lo = center - pert.max_value - pad;
  const double hi = center - pert.min_value + pad;

  auto extrema = [&](double t, ExtremaSides sides) {
    return detail::g_extrema_unchecked(fam, p, q, t, a, opts.grid, sides);
  };
  auto max_g = [&](double t) { return extrema(t, ExtremaSides::Max).max_G; };
  auto min_g = [&](double t) { return extrema(t, ExtremaSides::Min).min_G; };

  s.t_left = detail::bisect_increasing(max_g, lo, hi, opts.bisect_tol, "left boundary", a);
  s.t_right = detail::bisect_increasing(min_g, lo, hi, opts.bisect_tol, "right boundary", a);
  if (s.t_right < s.t_left) {
    // equal to within the bisection tolerance; keep the width non-negative
    s.t_left = s.t_right = 0.5 * (s.t_left + s.t_right);
  }
  s.x_left = extrema(s.t_left, ExtremaSides::Max).argmax;
  s.x_right = extrema(s.t_right, ExtremaSides::Min).argmin;
  s.width = s.t_right - s.t_left;
  return s;
}

/// boundary_at for each a, in input order.
inline std::vector<TongueSample> trace_boundary(const FamilySpec& fam, long long p, long long q,
                                                std::span<const double> a_values, const TongueOptions& opts = {},
                                                unsigned threads = 1) {
  require_coprime(p, q);
  for (std::size_t i = 1; i < a_values.size(); ++i) {
    if (a_values[i] < a_values[i - 1]) {
      throw ConfigError("a values must be sorted in increasing order");
    }
  }
  std::vector<TongueSample> out(a_values.size());
  parallel_for(a_values.size(), threads, [&](std::size_t i) { out[i] = boundary_at(fam, p, q, a_values[i], opts); });
  return out;
}

enum class BoundarySide { Left, Right };

struct BoundaryWitness {
  double x0 = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

/// Double fixed point of F^q - p on a tongue boundary.
///
/// x0 is the extremum of G at the boundary parameter, polished by Newton
/// steps on G'. g1 = G'(x0) comes from the chain rule and g2 = G''(x0) from
/// a central difference of G'. On the left boundary G has a maximum at x0
/// (g2 < 0), on the right a minimum (g2 > 0).
inline BoundaryWitness boundary_witness(const FamilySpec& fam, long long p, long long q, const TongueSample& sample,
                                        BoundarySide side) {
  require_coprime(p, q);
  fam.require(sample.a);
  const ParamPoint pt{side == BoundarySide::Left ? sample.t_left : sample.t_right, sample.a};
  constexpr double h = 1e-5;
  auto g1_at = [&](double x) { return displacement_dx(fam, q, pt, x); };
  auto g2_at = [&](double x) { return (g1_at(x + h) - g1_at(x - h)) / (2.0 * h); };

  double x0 = side == BoundarySide::Left ? sample.x_left : sample.x_right;
  double g2 = g2_at(x0);
  if (!(std::fabs(g2) >= 1e-6)) {
    throw DegenerateWitness("second derivative of G at the boundary is " + std::to_string(g2) + " at a = " +
                            std::to_string(sample.a));
  }
  double g1 = g1_at(x0);
  for (int it = 0; it < 3; ++it) {
    const double candidate = x0 - g1 / g2;
    const double g1_candidate = g1_at(candidate);
    if (!(std::fabs(g1_candidate) < std::fabs(g1))) break;
    x0 = candidate;
    g1 = g1_candidate;
    g2 = g2_at(x0);
  }
  x0 -= std::floor(x0);
  return {x0, displacement(fam, p, q, pt, x0), g1_at(x0), g2_at(x0)};
}

} // namespace tongue_lab
