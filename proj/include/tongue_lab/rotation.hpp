#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/parallel.hpp"

namespace tongue_lab {

/// Interval [lo, hi] certified to contain a translation number, from the
/// displacement bound |F^n(x) - x - n Trans(F)| < 1.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  long long iterations = 0;

  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

inline Enclosure enclosure_from_orbit(double endpoint, long long n) {
  const double nd = static_cast<double>(n);
  return {(endpoint - 1.0) / nd, (endpoint + 1.0) / nd, n};
}

namespace detail {

inline void require_checkpoints(std::span<const long long> checkpoints) {
  if (checkpoints.empty()) {
    throw ConfigError("at least one iteration count is required");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1) {
      throw ConfigError("iteration counts must be positive");
    }
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw ConfigError("iteration counts must be strictly increasing");
    }
  }
}

// Runs up to `Lanes` orbits of 0 side by side and records F^{n}(0) at every
// checkpoint. Independent orbits are interleaved so that the latency of one
// evaluation overlaps with the others.
template <std::size_t Lanes, class Perturb>
void orbit_batch(const Perturb& perturb, const ParamPoint* points, std::size_t count,
                 std::span<const long long> checkpoints, double* out) {
  std::array<double, Lanes> t{};
  std::array<double, Lanes> a{};
  std::array<double, Lanes> whole{};
  std::array<double, Lanes> frac{};
  for (std::size_t l = 0; l < Lanes; ++l) {
    const ParamPoint& p = points[std::min(l, count - 1)];
    t[l] = p.t;
    a[l] = p.a;
  }
  long long done = 0;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    for (; done < checkpoints[c]; ++done) {
      for (std::size_t l = 0; l < Lanes; ++l) {
        const double next = frac[l] + t[l] + perturb(a[l], frac[l]);
        const double shift = std::floor(next);
        whole[l] += shift;
        frac[l] = next - shift;
      }
    }
    for (std::size_t l = 0; l < count; ++l) {
      out[l * checkpoints.size() + c] = whole[l] + frac[l];
    }
  }
}

#if defined(__GNUC__)
// Standard family orbits on GCC/Clang vector types: 4 vectors of 8 lanes
// in flight hide the polynomial latency. Same operations as the scalar
// path, so the endpoints are identical.
using vec8 = double __attribute__((vector_size(64)));
using mask8 = long long __attribute__((vector_size(64)));

inline vec8 splat(double v) noexcept { return vec8{} + v; }

// round to nearest even, exact for |x| < 2^51
inline vec8 round_even(vec8 x) noexcept {
  const vec8 magic = splat(6755399441055744.0);
  return (x + magic) - magic;
}

inline vec8 floor8(vec8 x) noexcept {
  const vec8 r = round_even(x);
  return r > x ? r - 1.0 : r;
}

// sin(2 pi x) for x in [0, 1)
inline vec8 sin_turns_unit8(vec8 x) noexcept {
  const mask8 sign_bit = mask8{} + static_cast<long long>(0x8000000000000000ULL);
  const vec8 g = x - round_even(x);
  const vec8 ag = reinterpret_cast<vec8>(reinterpret_cast<mask8>(g) & ~sign_bit);
  const vec8 other = 0.5 - ag;
  const vec8 r = ag < other ? ag : other;
  const vec8 s = sin_quarter(6.283185307179586476925 * r);
  return reinterpret_cast<vec8>(reinterpret_cast<mask8>(s) | (reinterpret_cast<mask8>(g) & sign_bit));
}

constexpr std::size_t standard_lanes = 32;

inline void standard_orbit_batch(const ParamPoint* points, std::size_t count, std::span<const long long> checkpoints,
                                 double* out) {
  constexpr std::size_t groups = standard_lanes / 8;
  vec8 t[groups];
  vec8 a[groups];
  vec8 whole[groups];
  vec8 frac[groups];
  for (std::size_t k = 0; k < groups; ++k) {
    whole[k] = frac[k] = splat(0.0);
    for (std::size_t l = 0; l < 8; ++l) {
      const ParamPoint& p = points[std::min(8 * k + l, count - 1)];
      t[k][l] = p.t;
      a[k][l] = p.a;
    }
  }
  long long done = 0;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    for (; done < checkpoints[c]; ++done) {
      for (std::size_t k = 0; k < groups; ++k) {
        const vec8 next = frac[k] + t[k] + a[k] * sin_turns_unit8(frac[k]);
        const vec8 shift = floor8(next);
        whole[k] += shift;
        frac[k] = next - shift;
      }
    }
    for (std::size_t l = 0; l < count; ++l) {
      out[l * checkpoints.size() + c] = whole[l / 8][l % 8] + frac[l / 8][l % 8];
    }
  }
}
#endif

template <class Perturb>
void orbit_endpoints(const Perturb& perturb, std::span<const ParamPoint> points,
                     std::span<const long long> checkpoints, unsigned threads, std::vector<double>& out) {
  constexpr std::size_t lanes = 8;
  const std::size_t batches = (points.size() + lanes - 1) / lanes;
  out.assign(points.size() * checkpoints.size(), 0.0);
  parallel_for(batches, threads, [&](std::size_t b) {
    const std::size_t first = b * lanes;
    const std::size_t count = std::min(lanes, points.size() - first);
    orbit_batch<lanes>(perturb, points.data() + first, count, checkpoints,
                       out.data() + first * checkpoints.size());
  });
}

} // namespace detail

/// Enclosures of Trans(F_{t,a}) for many parameter points at several
/// iteration counts, from a single orbit of 0 per point. Result [i][c]
/// belongs to points[i] and checkpoints[c].
inline std::vector<std::vector<Enclosure>> trans_enclosure_ladders(const FamilySpec& fam,
                                                                    std::span<const ParamPoint> points,
                                                                    std::span<const long long> checkpoints,
                                                                    unsigned threads = 1) {
  detail::require_checkpoints(checkpoints);
  for (const auto& p : points) fam.require(p.a);

  std::vector<double> endpoints;
#if defined(__GNUC__)
  // the magic-constant rounding needs every iterate well below 2^51
  const bool vector_ok = std::all_of(points.begin(), points.end(), [](const ParamPoint& p) {
    return std::fabs(p.t) + std::fabs(p.a) < 1e15;
  });
  if (fam.kind() == FamilyKind::Standard && vector_ok) {
    constexpr std::size_t lanes = detail::standard_lanes;
    endpoints.assign(points.size() * checkpoints.size(), 0.0);
    parallel_for((points.size() + lanes - 1) / lanes, threads, [&](std::size_t b) {
      const std::size_t first = b * lanes;
      detail::standard_orbit_batch(points.data() + first, std::min(lanes, points.size() - first), checkpoints,
                                   endpoints.data() + first * checkpoints.size());
    });
  } else
#endif
  if (fam.kind() == FamilyKind::Standard) {
    detail::orbit_endpoints([](double a, double x) { return a * sin_turns_unit(x); }, points, checkpoints, threads,
                            endpoints);
  } else {
    detail::orbit_endpoints([&fam](double a, double x) { return fam.perturbation(a, x); }, points, checkpoints,
                            threads, endpoints);
  }

  std::vector<std::vector<Enclosure>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i].reserve(checkpoints.size());
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      out[i].push_back(enclosure_from_orbit(endpoints[i * checkpoints.size() + c], checkpoints[c]));
    }
  }
  return out;
}

inline std::vector<Enclosure> trans_enclosures(const FamilySpec& fam, std::span<const ParamPoint> points,
                                               long long n, unsigned threads = 1) {
  const std::array<long long, 1> checkpoints{n};
  auto ladders = trans_enclosure_ladders(fam, points, checkpoints, threads);
  std::vector<Enclosure> out;
  out.reserve(ladders.size());
  for (auto& ladder : ladders) out.push_back(ladder.front());
  return out;
}

/// lo = (F^n(0) - 1)/n, hi = (F^n(0) + 1)/n.
inline Enclosure trans_enclosure(const FamilySpec& fam, ParamPoint p, long long n) {
  fam.require(p.a);
  if (n < 1) {
    throw ConfigError("iteration count must be positive");
  }
  auto s = detail::SplitPoint::from(0.0);
  for (long long i = 0; i < n; ++i) {
    detail::advance(fam, p, s);
  }
  return enclosure_from_orbit(s.value(), n);
}

/// Midpoint of the enclosure; within 1/n of Trans(F_{t,a}).
inline double trans_estimate(const FamilySpec& fam, ParamPoint p, long long n) {
  return trans_enclosure(fam, p, n).midpoint();
}

struct StaircasePoint {
  double t = 0.0;
  double trans = 0.0;
};

/// Translation-number estimates at `steps` equally spaced t in [t_lo, t_hi].
inline std::vector<StaircasePoint> staircase(const FamilySpec& fam, double a, double t_lo, double t_hi, int steps,
                                             long long n, unsigned threads = 1) {
  if (!(t_lo < t_hi)) {
    throw ConfigError("staircase needs t_lo < t_hi");
  }
  if (steps < 2) {
    throw ConfigError("staircase needs at least two steps");
  }
  if (n < 1) {
    throw ConfigError("iteration count must be positive");
  }
  fam.require(a);
  std::vector<ParamPoint> points(static_cast<std::size_t>(steps));
  const double dt = (t_hi - t_lo) / static_cast<double>(steps - 1);
  for (int j = 0; j < steps; ++j) {
    points[static_cast<std::size_t>(j)] = {j == steps - 1 ? t_hi : t_lo + dt * j, a};
  }
  const auto enclosures = trans_enclosures(fam, points, n, threads);
  std::vector<StaircasePoint> out(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    out[j] = {points[j].t, enclosures[j].midpoint()};
  }
  return out;
}

struct ProfilePoint {
  double x = 0.0;
  double phi = 0.0;
};

/// Phi_N(x) = (1/N) sum_{k=1}^{N} (F^k(x) - F^k(0)) at x_j = j/(grid - 1).
///
/// Orbits are carried as integer part plus fraction; x = 1 shares the
/// fractional orbit of x = 0, so Phi_N(1) - Phi_N(0) = 1 exactly.
inline std::vector<ProfilePoint> semiconjugacy_profile(const FamilySpec& fam, ParamPoint p, long long N, int grid,
                                                       unsigned threads = 1) {
  fam.require(p.a);
  if (N < 1) {
    throw ConfigError("profile needs N >= 1");
  }
  if (grid < 2) {
    throw ConfigError("profile needs grid >= 2");
  }
  const std::size_t size = static_cast<std::size_t>(grid);

  // orbit of 0 stored once, then each grid point is compared against it
  std::vector<detail::SplitPoint> base(static_cast<std::size_t>(N));
  auto s = detail::SplitPoint::from(0.0);
  for (long long k = 0; k < N; ++k) {
    detail::advance(fam, p, s);
    base[static_cast<std::size_t>(k)] = s;
  }

  std::vector<ProfilePoint> out(size);
  const double inv_n = 1.0 / static_cast<double>(N);
  parallel_for(size, threads, [&](std::size_t j) {
    const double x = j + 1 == size ? 1.0 : static_cast<double>(j) / static_cast<double>(grid - 1);
    auto orbit = detail::SplitPoint::from(x);
    double whole_sum = 0.0;
    double frac_sum = 0.0;
    for (long long k = 0; k < N; ++k) {
      detail::advance(fam, p, orbit);
      const auto& b = base[static_cast<std::size_t>(k)];
      whole_sum += orbit.whole - b.whole;
      frac_sum += orbit.frac - b.frac;
    }
    out[j] = {x, (whole_sum + frac_sum) * inv_n};
  });
  return out;
}

} // namespace tongue_lab
