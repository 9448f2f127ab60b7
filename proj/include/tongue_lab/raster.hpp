#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/format.hpp"
#include "tongue_lab/parallel.hpp"
#include "tongue_lab/rotation.hpp"
#include "tongue_lab/tongue.hpp"

namespace tongue_lab {

enum class RasterMode { TransGray, TongueMask };

struct Fraction {
  long long p = 0;
  long long q = 1;
};

struct RasterConfig {
  FamilySpec family = FamilySpec::standard();
  double t_lo = 0.0;
  double t_hi = 1.0;
  double a_lo = 0.0;
  double a_hi = 0.15;
  int width = 800;
  int height = 400;
  long long iterations = 30000;
  RasterMode mode = RasterMode::TransGray;
  std::vector<Fraction> tongues;
  unsigned threads = 1;
  TongueOptions tongue_options{};
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, row 0 at the top
  std::vector<int> skipped_rows;
  std::string comment;

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col)];
  }
};

inline void validate(const RasterConfig& cfg) {
  if (!(cfg.t_lo < cfg.t_hi)) throw ConfigError("raster needs t_lo < t_hi");
  if (!(cfg.a_lo <= cfg.a_hi)) throw ConfigError("raster needs a_lo <= a_hi");
  if (cfg.width < 2 || cfg.height < 2) throw ConfigError("raster needs at least 2x2 pixels");
  if (cfg.iterations < 1) throw ConfigError("iteration count must be positive");
  if (cfg.mode == RasterMode::TongueMask && cfg.tongues.empty()) {
    throw ConfigError("tongue mask needs at least one p/q");
  }
  for (const auto& f : cfg.tongues) require_coprime(f.p, f.q);
}

/// Column j sits at t = t_lo + j (t_hi - t_lo)/(width - 1); row r at
/// a = a_hi - r (a_hi - a_lo)/(height - 1), so a increases upward.
inline double raster_t(const RasterConfig& cfg, int col) {
  if (col == cfg.width - 1) return cfg.t_hi;
  return cfg.t_lo + (cfg.t_hi - cfg.t_lo) * static_cast<double>(col) / static_cast<double>(cfg.width - 1);
}

inline double raster_a(const RasterConfig& cfg, int row) {
  if (row == 0) return cfg.a_hi;
  return cfg.a_hi - (cfg.a_hi - cfg.a_lo) * static_cast<double>(row) / static_cast<double>(cfg.height - 1);
}

namespace detail {

inline void render_gray_row(const RasterConfig& cfg, double a, std::uint8_t* out) {
  std::vector<ParamPoint> points(static_cast<std::size_t>(cfg.width));
  for (int j = 0; j < cfg.width; ++j) points[static_cast<std::size_t>(j)] = {raster_t(cfg, j), a};
  const auto enclosures = trans_enclosures(cfg.family, points, cfg.iterations);
  for (int j = 0; j < cfg.width; ++j) {
    const double est = enclosures[static_cast<std::size_t>(j)].midpoint();
    const double frac = est - std::floor(est);
    out[j] = static_cast<std::uint8_t>(std::lround(std::min(frac, 1.0) * 255.0));
  }
}

// Pixel is set when t lies in the closed t-interval of some listed tongue or
// of one of its integer translates, with the classification tolerance as
// slack on both ends.
inline void render_mask_row(const RasterConfig& cfg, double a, std::uint8_t* out) {
  constexpr double slack = 1e-10;
  std::vector<std::pair<double, double>> intervals;
  for (const auto& f : cfg.tongues) {
    const auto s = boundary_at(cfg.family, f.p, f.q, a, cfg.tongue_options);
    const double m_lo = std::floor(cfg.t_lo - s.t_right) - 1.0;
    const double m_hi = std::ceil(cfg.t_hi - s.t_left) + 1.0;
    for (double m = m_lo; m <= m_hi; m += 1.0) {
      intervals.emplace_back(s.t_left + m - slack, s.t_right + m + slack);
    }
  }
  for (int j = 0; j < cfg.width; ++j) {
    const double t = raster_t(cfg, j);
    bool inside = false;
    for (const auto& [lo, hi] : intervals) {
      if (lo <= t && t <= hi) {
        inside = true;
        break;
      }
    }
    out[j] = inside ? 255 : 0;
  }
}

} // namespace detail

/// Renders the parameter rectangle. Rows are independent and written to
/// their own slot, so the bytes do not depend on the thread count. Rows
/// whose a is outside the usable range stay black and are listed in
/// `skipped_rows`.
inline Image render(const RasterConfig& cfg) {
  validate(cfg);
  Image img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.pixels.assign(static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height), 0);
  const bool mask = cfg.mode == RasterMode::TongueMask;
  img.comment = std::string("tongue-lab ") + (mask ? "tongue-mask" : "trans-gray") + " family=" +
                cfg.family.name() + " t=[" + fmt17(cfg.t_lo) + "," + fmt17(cfg.t_hi) + "] left to right a=[" +
                fmt17(cfg.a_lo) + "," + fmt17(cfg.a_hi) + "] bottom to top";

  std::vector<char> skipped(static_cast<std::size_t>(cfg.height), 0);
  parallel_for(static_cast<std::size_t>(cfg.height), cfg.threads, [&](std::size_t r) {
    const double a = raster_a(cfg, static_cast<int>(r));
    const bool usable = mask ? (a > 0.95 * cfg.family.a_min() && a < 0.95 * cfg.family.a_max())
                             : cfg.family.admits(a);
    if (!usable) {
      skipped[r] = 1;
      return;
    }
    std::uint8_t* row = img.pixels.data() + r * static_cast<std::size_t>(cfg.width);
    if (mask) {
      detail::render_mask_row(cfg, a, row);
    } else {
      detail::render_gray_row(cfg, a, row);
    }
  });
  for (int r = 0; r < cfg.height; ++r) {
    if (skipped[static_cast<std::size_t>(r)]) img.skipped_rows.push_back(r);
  }
  return img;
}

/// Binary PGM (P5, maxval 255) with one comment line.
inline std::string encode_pgm(const Image& img) {
  std::string out = "P5\n";
  if (!img.comment.empty()) out += "# " + img.comment + "\n";
  out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  return out;
}

} // namespace tongue_lab
