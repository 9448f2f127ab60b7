#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tongue_lab/errors.hpp"
#include "tongue_lab/trig.hpp"

namespace tongue_lab {

/// Fourier coefficients c_k, |k| <= k_max, of a 1-periodic function sampled
/// at x_j = j/N:  c_k = (1/N) sum_j f(x_j) e^{-2 pi i k x_j}.
class FourierSpectrum {
public:
  FourierSpectrum() = default;

  FourierSpectrum(std::span<const double> samples, int k_max) : k_max_(k_max) {
    const std::size_t n = samples.size();
    if (n == 0 || k_max < 0 || static_cast<std::size_t>(2 * k_max) >= n) {
      throw ConfigError("spectrum needs more than 2*k_max samples");
    }
    coeffs_.resize(static_cast<std::size_t>(2 * k_max + 1));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int k = -k_max; k <= k_max; ++k) {
      std::complex<double> sum = 0.0;
      const long long kk = k < 0 ? k + static_cast<long long>(n) : k;
      for (std::size_t j = 0; j < n; ++j) {
        // phase k*j/N reduced exactly in integers
        const double phase = static_cast<double>((kk * static_cast<long long>(j)) % static_cast<long long>(n)) * inv_n;
        sum += samples[j] * std::complex<double>(cos_turns(phase), -sin_turns(phase));
      }
      coeffs_[static_cast<std::size_t>(k + k_max)] = sum * inv_n;
    }
  }

  int k_max() const noexcept { return k_max_; }

  std::complex<double> operator[](int k) const {
    if (k < -k_max_ || k > k_max_) {
      throw ConfigError("frequency outside the computed spectrum");
    }
    return coeffs_[static_cast<std::size_t>(k + k_max_)];
  }

  /// max_k |c_{-k} - conj(c_k)|; zero for real-valued samples up to roundoff.
  double reality_defect() const {
    double worst = 0.0;
    for (int k = 0; k <= k_max_; ++k) {
      worst = std::max(worst, std::abs((*this)[-k] - std::conj((*this)[k])));
    }
    return worst;
  }

private:
  int k_max_ = 0;
  std::vector<std::complex<double>> coeffs_;
};

/// Samples of f at x_j = j/N, j = 0..N-1.
template <class Fn>
std::vector<double> sample_periodic(const Fn& f, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = f(static_cast<double>(j) / static_cast<double>(n));
  }
  return out;
}

} // namespace tongue_lab
