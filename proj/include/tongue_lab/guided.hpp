#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/fourier.hpp"

namespace tongue_lab {

namespace detail {

// Fornberg's recursion: weights w[j] with f^{(m)}(0) ~ sum_j w[j] f(nodes[j]).
inline std::vector<double> fd_weights(const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = c[i][m];
  return out;
}

} // namespace detail

/// Xi_n(t, x) = (1/n!) d^n/da^n F_{t,a}(x) at a = 0, sampled at x_j = j/grid.
///
/// Families affine in a return phi for n = 1 and 0 beyond. Otherwise a
/// central difference stencil of accuracy order n + 2 (rounded up to even)
/// with step eps^{1/(n+2)} times the smaller side of the parameter range is
/// applied to the perturbation. The t-dependence of F is the translation t,
/// which only enters at order 0.
inline std::vector<double> xi_coefficient(const FamilySpec& fam, [[maybe_unused]] double t, int n,
                                          int grid = 4096) {
  if (n < 1 || n > 6) throw ConfigError("order n must lie in 1..6");
  if (grid < 2) throw ConfigError("grid must have at least 2 points");

  if (fam.affine_in_a()) {
    if (n == 1) {
      return sample_periodic([&](double x) { return fam.base_perturbation(x); }, grid);
    }
    return std::vector<double>(static_cast<std::size_t>(grid), 0.0);
  }

  int accuracy = n + 2;
  if (accuracy % 2 != 0) ++accuracy;
  const int radius = (n + 1) / 2 + accuracy / 2 - 1;
  const double span = std::min(std::fabs(fam.a_min()), std::fabs(fam.a_max()));
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (n + 2)) * span;
  if (!(h > 0.0) || !std::isfinite(h) || radius * h >= span) {
    throw StepUnderflow("finite difference stencil does not fit the parameter range");
  }
  std::vector<double> nodes;
  for (int j = -radius; j <= radius; ++j) nodes.push_back(static_cast<double>(j));
  auto weights = detail::fd_weights(nodes, n);
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const double scale = 1.0 / (std::pow(h, n) * factorial);

  return sample_periodic(
      [&](double x) {
        double sum = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          if (weights[j] == 0.0) continue;
          sum += weights[j] * fam.perturbation(nodes[j] * h, x);
        }
        return sum * scale;
      },
      grid);
}

struct SpectrumReport {
  int n = 0;
  double t = 0.0;
  FourierSpectrum spectrum;
  bool degree_bound_satisfied = false;
  int worst_k = 0;
  double worst_magnitude = 0.0;
  double reality_defect = 0.0;
};

/// Checks that Xi_n(t, .) is a trigonometric polynomial of degree <= n:
/// every Fourier coefficient with |k| > n must be below tol.
inline SpectrumReport degree_check(const FamilySpec& fam, double t, int n, double tol = 1e-6, int k_max = 0) {
  if (k_max == 0) k_max = 2 * n + 4;
  if (k_max < 2 * n + 4) throw ConfigError("k_max must be at least 2n + 4");
  const auto samples = xi_coefficient(fam, t, n, 1 << 12);
  SpectrumReport rep;
  rep.n = n;
  rep.t = t;
  rep.spectrum = FourierSpectrum(samples, k_max);
  rep.reality_defect = rep.spectrum.reality_defect();
  rep.worst_k = n + 1;
  for (int k = n + 1; k <= k_max; ++k) {
    for (int signed_k : {k, -k}) {
      const double mag = std::abs(rep.spectrum[signed_k]);
      if (mag > rep.worst_magnitude) {
        rep.worst_magnitude = mag;
        rep.worst_k = signed_k;
      }
    }
  }
  rep.degree_bound_satisfied = rep.worst_magnitude < tol;
  return rep;
}

} // namespace tongue_lab
