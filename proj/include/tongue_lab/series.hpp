#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "tongue_lab/errors.hpp"
#include "tongue_lab/tongue.hpp"
#include "tongue_lab/trig.hpp"

namespace tongue_lab {

using Complex = std::complex<double>;

/// Taylor coefficients c_0..c_N of a germ at 0. `truncated` marks results
/// of arithmetic that dropped terms beyond order N.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order = 32) : coeffs_(checked_size(order), Complex(0.0)) {}

  TruncatedSeries(std::vector<Complex> coeffs, int order) : coeffs_(checked_size(order), Complex(0.0)) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k < coeffs_.size()) {
        coeffs_[k] = coeffs[k];
      } else if (coeffs[k] != Complex(0.0)) {
        truncated_ = true;
      }
    }
  }

  static TruncatedSeries identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1.0;
    return s;
  }

  static TruncatedSeries constant(Complex c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool truncated() const noexcept { return truncated_; }
  void set_truncated(bool value) noexcept { truncated_ = value; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Complex& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw ConfigError("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Complex> coeffs_;
  bool truncated_ = false;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order()) {
    throw OrderMismatch("series orders differ: " + std::to_string(f.order()) + " vs " + std::to_string(g.order()));
  }
}

inline bool has_tail(const TruncatedSeries& s) {
  for (int k = 1; k <= s.order(); ++k) {
    if (s[k] != Complex(0.0)) return true;
  }
  return false;
}

} // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  detail::require_same_order(f, g);
  TruncatedSeries out(f.order());
  for (int k = 0; k <= f.order(); ++k) out[k] = f[k] + g[k];
  out.set_truncated(f.truncated() || g.truncated());
  return out;
}

inline TruncatedSeries series_scale(const TruncatedSeries& f, Complex c) {
  TruncatedSeries out(f.order());
  for (int k = 0; k <= f.order(); ++k) out[k] = c * f[k];
  out.set_truncated(f.truncated());
  return out;
}

/// Cauchy product truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  detail::require_same_order(f, g);
  const int n = f.order();
  TruncatedSeries out(n);
  bool dropped = false;
  for (int i = 0; i <= n; ++i) {
    if (f[i] == Complex(0.0)) continue;
    for (int j = 0; j <= n; ++j) {
      if (g[j] == Complex(0.0)) continue;
      if (i + j <= n) {
        out[i + j] += f[i] * g[j];
      } else {
        dropped = true;
      }
    }
  }
  out.set_truncated(dropped || f.truncated() || g.truncated());
  return out;
}

/// exp(f) from e' = f' e: e_k = (1/k) sum_{j=1}^{k} j f_j e_{k-j}.
inline TruncatedSeries series_exp(const TruncatedSeries& f) {
  const int n = f.order();
  TruncatedSeries out(n);
  out[0] = std::exp(f[0]);
  for (int k = 1; k <= n; ++k) {
    Complex sum = 0.0;
    for (int j = 1; j <= k; ++j) sum += static_cast<double>(j) * f[j] * out[k - j];
    out[k] = sum / static_cast<double>(k);
  }
  out.set_truncated(detail::has_tail(f) || f.truncated());
  return out;
}

/// f(g(z)) truncated at the common order, by Horner's scheme in g.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  detail::require_same_order(f, g);
  if (g[0] != Complex(0.0)) {
    throw NonvanishingConstantTerm("inner series of a composition must vanish at 0");
  }
  const int n = f.order();
  TruncatedSeries out = TruncatedSeries::constant(f[n], n);
  bool dropped = false;
  for (int k = n - 1; k >= 0; --k) {
    out = series_mul(out, g);
    dropped = dropped || out.truncated();
    out[0] += f[k];
  }
  out.set_truncated(dropped || f.truncated() || g.truncated());
  return out;
}

/// q-fold composition f o ... o f by q - 1 successive compositions.
inline TruncatedSeries series_iterate(const TruncatedSeries& f, long long q) {
  if (q < 1) throw ConfigError("iterate count must be positive");
  TruncatedSeries out = f;
  for (long long i = 1; i < q; ++i) out = series_compose(f, out);
  return out;
}

/// q-fold composition by repeated squaring.
inline TruncatedSeries series_iterate_binary(const TruncatedSeries& f, long long q) {
  if (q < 1) throw ConfigError("iterate count must be positive");
  TruncatedSeries result = TruncatedSeries::identity(f.order());
  TruncatedSeries power = f;
  bool have_result = false;
  while (q > 0) {
    if (q & 1) {
      result = have_result ? series_compose(power, result) : power;
      have_result = true;
    }
    q >>= 1;
    if (q > 0) power = series_compose(power, power);
  }
  return result;
}

enum class GuideKind { Standard, Blaschke };

inline const char* to_string(GuideKind kind) { return kind == GuideKind::Standard ? "standard" : "blaschke"; }

/// e^{2 pi i p/q}, with the phase reduced exactly.
inline Complex root_of_unity(long long p, long long q) {
  const long long r = ((p % q) + q) % q;
  const double turns = static_cast<double>(r) / static_cast<double>(q);
  return {cos_turns(turns), sin_turns(turns)};
}

/// Taylor series at 0 of the guiding map at t = p/q:
///   Standard: e^{2 pi i p/q} z e^{pi z};   Blaschke: e^{2 pi i p/q} w (1 - w).
inline TruncatedSeries guide_series(GuideKind kind, long long p, long long q, int order = 32) {
  require_coprime(p, q);
  if (order < 2) throw InsufficientOrder("guide series needs order >= 2");
  const Complex multiplier = root_of_unity(p, q);
  TruncatedSeries out(order);
  if (kind == GuideKind::Standard) {
    const auto e = series_exp(series_scale(TruncatedSeries::identity(order), std::numbers::pi));
    for (int k = 1; k <= order; ++k) out[k] = multiplier * e[k - 1];
    out.set_truncated(true);
  } else {
    out[1] = multiplier;
    out[2] = -multiplier;
  }
  return out;
}

struct ParabolicData {
  Complex multiplier;
  long long p = 0;
  long long q = 1;
  int nu = 0;
  Complex C;
  int leading_index = 0;
  // zero test details: rescaling factor applied to coefficients before the
  // threshold, and the largest scaled magnitude judged to be zero
  double scale = 1.0;
  double threshold = 1e-10;
  double max_rejected = 0.0;
};

/// Leading term of f^q(z) - z for a germ with multiplier a q-th root of
/// unity: f^q(z) = z + C z^{nu q + 1} + ...
///
/// The zero test runs on the rescaled germ f(rho z)/rho whose coefficients
/// c_k rho^{k-1} are at most 1, so the threshold is scale free.
inline ParabolicData parabolic_data(const TruncatedSeries& f, long long q) {
  if (q < 1) throw ConfigError("q must be positive");
  const int n = f.order();
  if (n < 2 * q + 2) {
    throw InsufficientOrder("series order " + std::to_string(n) + " below 2q + 2 = " + std::to_string(2 * q + 2));
  }
  if (f[0] != Complex(0.0)) {
    throw NonvanishingConstantTerm("germ must fix 0");
  }
  const Complex c1 = f[1];
  if (std::fabs(std::abs(c1) - 1.0) > 1e-10 || std::abs(std::pow(c1, static_cast<double>(q)) - 1.0) > 1e-10) {
    throw NotRootOfUnity("multiplier is not a " + std::to_string(q) + "-th root of unity");
  }

  ParabolicData pd;
  pd.multiplier = c1;
  pd.q = q;
  const double turns = std::arg(c1) / (2.0 * std::numbers::pi);
  pd.p = ((static_cast<long long>(std::llround(turns * static_cast<double>(q))) % q) + q) % q;

  double growth = 1.0;
  for (int k = 2; k <= n; ++k) {
    growth = std::max(growth, std::pow(std::abs(f[k]), 1.0 / (k - 1)));
  }
  pd.scale = 1.0 / growth;

  const auto iterate = series_iterate(f, q);
  int lead = -1;
  for (int k = 2; k <= n; ++k) {
    Complex d = iterate[k];
    const double scaled = std::abs(d) * std::pow(pd.scale, k - 1);
    if (scaled > pd.threshold) {
      lead = k;
      break;
    }
    pd.max_rejected = std::max(pd.max_rejected, scaled);
  }
  if (lead < 0) {
    throw IdentityToTruncation("f^" + std::to_string(q) + " is the identity up to order " + std::to_string(n));
  }
  if ((lead - 1) % q != 0) {
    throw NonresonantLeadingTerm("leading index " + std::to_string(lead) + " is not 1 mod " + std::to_string(q));
  }
  pd.leading_index = lead;
  pd.nu = static_cast<int>((lead - 1) / q);
  pd.C = iterate[lead];
  return pd;
}

/// 2|C|/(pi q): predicted tongue width divided by a^q.
inline double width_coefficient(const ParabolicData& pd) {
  if (pd.nu != 1) {
    throw MultiplicityNotOne("parabolic multiplicity " + std::to_string(pd.nu) + " (width law needs 1)");
  }
  return 2.0 * std::abs(pd.C) / (std::numbers::pi * static_cast<double>(pd.q));
}

} // namespace tongue_lab
