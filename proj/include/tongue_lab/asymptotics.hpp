#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/extrema.hpp"
#include "tongue_lab/fourier.hpp"
#include "tongue_lab/parallel.hpp"
#include "tongue_lab/tongue.hpp"

namespace tongue_lab {

/// Mean over translates: (1/q) sum_{k<q} phi(x + k p/q), with phi the
/// a-independent perturbation of the family.
inline double translate_average(const FamilySpec& fam, long long p, long long q, double x) {
  double sum = 0.0;
  for (long long k = 0; k < q; ++k) {
    const long long r = ((k * p) % q + q) % q;
    sum += fam.base_perturbation(x + static_cast<double>(r) / static_cast<double>(q));
  }
  return sum / static_cast<double>(q);
}

struct TranslateAverage {
  long long p = 0;
  long long q = 1;
  std::vector<double> x;
  std::vector<double> values;
  FourierSpectrum spectrum;
};

inline TranslateAverage average_translates(const FamilySpec& fam, long long p, long long q, int grid = 4096,
                                           int k_max = 32) {
  require_coprime(p, q);
  if (grid < 2 * k_max + 1) {
    throw ConfigError("grid too small for the requested spectrum");
  }
  TranslateAverage out;
  out.p = p;
  out.q = q;
  out.values = sample_periodic([&](double x) { return translate_average(fam, p, q, x); }, grid);
  out.x.resize(out.values.size());
  for (std::size_t j = 0; j < out.x.size(); ++j) out.x[j] = static_cast<double>(j) / grid;
  out.spectrum = FourierSpectrum(out.values, k_max);
  return out;
}

/// Mean of the a-independent perturbation (trapezoid rule on 2^14 points,
/// exact for trigonometric polynomials of lower degree).
inline double perturbation_mean(const FamilySpec& fam) {
  constexpr int n = 1 << 14;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += fam.base_perturbation(static_cast<double>(j) / n);
  return sum / n;
}

/// Slope at a = 0 of the boundary curve of an irrational tongue.
inline double irrational_slope(const FamilySpec& fam) { return -perturbation_mean(fam); }

struct SlopeReport {
  long long p = 0;
  long long q = 1;
  double M_A = 0.0;
  double m_A = 0.0;
  double mean_phi = 0.0;
  double slope_minus = 0.0;
  double slope_plus = 0.0;
  double angle_geometric = 0.0;
  // arctan((M - m)(1 + mM)/(mM)^2); absent when mM = 0
  std::optional<double> angle_closed_form;
};

/// First-order opening of the p/q tongue at a = 0: the boundaries leave p/q
/// with slopes -M_A and -m_A, the extrema of the translate average.
inline SlopeReport slopes(const FamilySpec& fam, long long p, long long q) {
  require_coprime(p, q);
  SlopeReport r;
  r.p = p;
  r.q = q;
  const auto ext = periodic_extrema([&](double x) { return translate_average(fam, p, q, x); }, 4096);
  r.M_A = ext.max_value;
  r.m_A = ext.min_value;
  r.mean_phi = perturbation_mean(fam);
  if (r.M_A - r.m_A < 1e-12) {
    r.M_A = r.m_A = r.mean_phi;
  }
  r.slope_minus = -r.M_A;
  r.slope_plus = -r.m_A;
  const double spread = r.M_A - r.m_A;
  r.angle_geometric = spread == 0.0 ? 0.0 : std::atan2(std::fabs(spread), 1.0 + r.m_A * r.M_A);
  const double prod = r.m_A * r.M_A;
  if (prod != 0.0) {
    r.angle_closed_form = std::atan(spread * (1.0 + prod) / (prod * prod));
  }
  return r;
}

struct FirstOrderRow {
  double a = 0.0;
  double gamma_minus = 0.0;
  double gamma_plus = 0.0;
  double ratio_minus = 0.0;
  double ratio_plus = 0.0;
};

struct FirstOrderReport {
  SlopeReport slopes;
  std::vector<FirstOrderRow> rows;
  // larger of the two ratios at the smallest |a|
  double final_ratio = 0.0;
  // ratios never increase as |a| shrinks
  bool decreasing = true;
};

/// Compares boundary offsets with the first-order prediction
/// gamma_-(a) = p/q - M_A a, gamma_+(a) = p/q - m_A a. For a >= 0 gamma_- is
/// the left boundary, for a < 0 the right one.
inline FirstOrderReport verify_first_order(const FamilySpec& fam, long long p, long long q,
                                           std::span<const double> a_values, const TongueOptions& opts = {},
                                           unsigned threads = 1) {
  FirstOrderReport rep;
  rep.slopes = slopes(fam, p, q);
  for (double a : a_values) {
    if (a == 0.0) throw ConfigError("first-order check needs nonzero a");
  }
  std::vector<double> order(a_values.begin(), a_values.end());
  std::sort(order.begin(), order.end(), [](double x, double y) { return std::fabs(x) > std::fabs(y); });
  std::vector<TongueSample> samples(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) { samples[i] = boundary_at(fam, p, q, order[i], opts); });

  const double center = static_cast<double>(p) / static_cast<double>(q);
  double prev = HUGE_VAL;
  for (const auto& s : samples) {
    FirstOrderRow row;
    row.a = s.a;
    row.gamma_minus = s.a >= 0.0 ? s.t_left : s.t_right;
    row.gamma_plus = s.a >= 0.0 ? s.t_right : s.t_left;
    row.ratio_minus = std::fabs(row.gamma_minus - center + rep.slopes.M_A * s.a) / std::fabs(s.a);
    row.ratio_plus = std::fabs(row.gamma_plus - center + rep.slopes.m_A * s.a) / std::fabs(s.a);
    const double worst = std::max(row.ratio_minus, row.ratio_plus);
    if (worst > prev + 1e-12) rep.decreasing = false;
    prev = worst;
    rep.final_ratio = worst;
    rep.rows.push_back(row);
  }
  return rep;
}

struct ContactFit {
  double exponent = 0.0;
  double coefficient = 0.0;
  double residual = 0.0;
  int samples_used = 0;
};

namespace detail {

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

inline LogFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw InsufficientData("width fit needs at least two distinct values of a");
  }
  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.residual = std::max(fit.residual, std::fabs(ys[i] - fit.intercept - fit.slope * xs[i]));
  }
  return fit;
}

} // namespace detail

/// Power law width ~ coefficient * |a|^exponent by least squares in log-log
/// coordinates. While the worst deviation exceeds 0.02 the largest |a| is
/// dropped, at most twice and never below three samples.
inline ContactFit fit_contact(std::span<const TongueSample> samples) {
  constexpr double width_floor = 1e-11;
  std::vector<TongueSample> usable;
  for (const auto& s : samples) {
    if (s.a != 0.0) usable.push_back(s);
  }
  if (usable.size() < 4) {
    throw InsufficientData("width fit needs at least 4 samples with nonzero a, got " +
                           std::to_string(usable.size()));
  }
  for (const auto& s : usable) {
    if (!(s.width > width_floor)) {
      throw UnderflowedWidths("width " + std::to_string(s.width) + " at a = " + std::to_string(s.a) +
                              " is at the solver tolerance; use larger a");
    }
  }
  std::sort(usable.begin(), usable.end(),
            [](const TongueSample& x, const TongueSample& y) { return std::fabs(x.a) < std::fabs(y.a); });

  std::vector<double> xs, ys;
  for (const auto& s : usable) {
    xs.push_back(std::log(std::fabs(s.a)));
    ys.push_back(std::log(s.width));
  }
  auto fit = detail::least_squares(xs, ys);
  for (int drop = 0; drop < 2 && fit.residual > 0.02 && xs.size() > 3; ++drop) {
    xs.pop_back();
    ys.pop_back();
    fit = detail::least_squares(xs, ys);
  }
  return {fit.slope, std::exp(fit.intercept), fit.residual, static_cast<int>(xs.size())};
}

/// a0 2^{-k} for k = count-1 down to 0, in increasing order as
/// trace_boundary expects. a0 starts at 0.16, or 90% of the upper end of the
/// solver range when that is smaller, and is halved while the tongue at a0 is wider than a tenth of
/// 1/(q(q+1)), the gap to the nearest neighbouring tongue of order q+1.
inline std::vector<double> default_ladder(const FamilySpec& fam, long long p, long long q, int count = 6,
                                          const TongueOptions& opts = {}) {
  require_coprime(p, q);
  double a0 = std::min(0.16, 0.9 * 0.95 * fam.a_max());
  const double limit = 0.1 / static_cast<double>(q * (q + 1));
  for (int i = 0; i < 40 && boundary_at(fam, p, q, a0, opts).width > limit; ++i) a0 *= 0.5;
  std::vector<double> out;
  for (int k = count - 1; k >= 0; --k) out.push_back(std::ldexp(a0, -k));
  return out;
}

} // namespace tongue_lab
