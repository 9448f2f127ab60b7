#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tongue_lab/errors.hpp"
#include "tongue_lab/extrema.hpp"
#include "tongue_lab/trig.hpp"

namespace tongue_lab {

enum class FamilyKind { Standard, Blaschke, Angle, Fourier };

inline const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Standard: return "standard";
    case FamilyKind::Blaschke: return "blaschke";
    case FamilyKind::Angle: return "angle";
    case FamilyKind::Fourier: return "fourier";
  }
  return "unknown";
}

/// One term of a real perturbation given by Fourier data: frequency k > 0
/// contributes c e^{2 pi i k x} + conj(c) e^{-2 pi i k x}; k = 0 contributes
/// the constant Re(c).
struct FourierTerm {
  int k = 0;
  std::complex<double> c;
};

/// A point (t, a) of the parameter plane.
struct ParamPoint {
  double t = 0.0;
  double a = 0.0;
};

/// Two-parameter family of lifts F_{t,a}(x) = x + t + P(a, x), x in turns.
///
/// For the Standard, Angle and Fourier kinds P(a, x) = a phi(x); the
/// Blaschke kind has an a-dependent perturbation
///   P(a, x) = -arctan(a sin 2 pi x / (1 - a cos 2 pi x)) / pi,
/// the lift of z -> e^{2 pi i t} z (1 - a z)/(1 - a/z) on the unit circle.
/// The open interval (a_min, a_max) is where every F_{t,a} is strictly
/// increasing.
class FamilySpec {
public:
  static FamilySpec standard() {
    FamilySpec f(FamilyKind::Standard);
    f.a_min_ = -1.0 / (2.0 * std::numbers::pi);
    f.a_max_ = 1.0 / (2.0 * std::numbers::pi);
    return f;
  }

  static FamilySpec blaschke() {
    FamilySpec f(FamilyKind::Blaschke);
    f.a_min_ = -1.0 / 3.0;
    f.a_max_ = 1.0 / 3.0;
    return f;
  }

  /// phi(x) = sum_{n=1}^{terms} sin(2 pi n x) / n!
  static FamilySpec angle(int terms = 12) {
    if (terms < 1) {
      throw ConfigError("angle family needs at least one term");
    }
    FamilySpec f(FamilyKind::Angle);
    f.angle_terms_ = terms;
    double factorial = 1.0;
    for (int n = 1; n <= terms; ++n) {
      factorial *= n;
      f.angle_weights_.push_back(1.0 / factorial);
    }
    f.compute_range_from_derivative();
    return f;
  }

  static FamilySpec fourier(std::vector<FourierTerm> terms) {
    for (const auto& term : terms) {
      if (term.k < 0) {
        throw ConfigError("fourier frequencies must be non-negative");
      }
    }
    FamilySpec f(FamilyKind::Fourier);
    f.fourier_ = std::move(terms);
    f.compute_range_from_derivative();
    return f;
  }

  FamilyKind kind() const noexcept { return kind_; }
  std::string name() const { return to_string(kind_); }
  double a_min() const noexcept { return a_min_; }
  double a_max() const noexcept { return a_max_; }
  int angle_terms() const noexcept { return angle_terms_; }
  const std::vector<FourierTerm>& fourier_terms() const noexcept { return fourier_; }

  /// True when P(a, x) = a * phi(x) with phi independent of a.
  bool affine_in_a() const noexcept { return kind_ != FamilyKind::Blaschke; }

  bool admits(double a) const noexcept { return a > a_min_ && a < a_max_; }

  void require(double a) const {
    if (!admits(a)) {
      throw ParameterOutOfRange("a = " + std::to_string(a) + " outside (" + std::to_string(a_min_) +
                                ", " + std::to_string(a_max_) + ") for the " + name() + " family");
    }
  }

  /// P(a, x) = F_{0,a}(x) - x. No range check.
  double perturbation(double a, double x) const noexcept {
    switch (kind_) {
      case FamilyKind::Standard:
        return a * sin_turns(x);
      case FamilyKind::Blaschke: {
        const double s = sin_turns(x);
        const double c = cos_turns(x);
        return -std::atan2(a * s, 1.0 - a * c) / std::numbers::pi;
      }
      case FamilyKind::Angle:
        return a * angle_phi(x);
      case FamilyKind::Fourier:
        return a * fourier_phi(x);
    }
    return 0.0;
  }

  /// d/dx P(a, x). No range check.
  double perturbation_dx(double a, double x) const noexcept {
    switch (kind_) {
      case FamilyKind::Standard:
        return a * 2.0 * std::numbers::pi * cos_turns(x);
      case FamilyKind::Blaschke: {
        const double c = cos_turns(x);
        return -2.0 * (a * c - a * a) / (1.0 - 2.0 * a * c + a * a);
      }
      case FamilyKind::Angle:
        return a * angle_phi_dx(x);
      case FamilyKind::Fourier:
        return a * fourier_phi_dx(x);
    }
    return 0.0;
  }

  /// The a-independent perturbation d/da P(a, x) at a = 0. Equals phi for
  /// the affine kinds and xi(0, x) = -sin(2 pi x)/pi for Blaschke.
  double base_perturbation(double x) const noexcept {
    switch (kind_) {
      case FamilyKind::Standard: return sin_turns(x);
      case FamilyKind::Blaschke: return -sin_turns(x) / std::numbers::pi;
      case FamilyKind::Angle: return angle_phi(x);
      case FamilyKind::Fourier: return fourier_phi(x);
    }
    return 0.0;
  }

  double base_perturbation_dx(double x) const noexcept {
    switch (kind_) {
      case FamilyKind::Standard: return 2.0 * std::numbers::pi * cos_turns(x);
      case FamilyKind::Blaschke: return -2.0 * cos_turns(x);
      case FamilyKind::Angle: return angle_phi_dx(x);
      case FamilyKind::Fourier: return fourier_phi_dx(x);
    }
    return 0.0;
  }

private:
  explicit FamilySpec(FamilyKind kind) : kind_(kind) {}

  double angle_phi(double x) const noexcept {
    const std::complex<double> z(cos_turns(x), sin_turns(x));
    std::complex<double> w = z;
    double sum = 0.0;
    for (double weight : angle_weights_) {
      sum += weight * w.imag();
      w *= z;
    }
    return sum;
  }

  double angle_phi_dx(double x) const noexcept {
    const std::complex<double> z(cos_turns(x), sin_turns(x));
    std::complex<double> w = z;
    double sum = 0.0;
    double n = 1.0;
    for (double weight : angle_weights_) {
      sum += n * weight * w.real();
      w *= z;
      n += 1.0;
    }
    return 2.0 * std::numbers::pi * sum;
  }

  double fourier_phi(double x) const noexcept {
    double sum = 0.0;
    for (const auto& term : fourier_) {
      if (term.k == 0) {
        sum += term.c.real();
        continue;
      }
      const double kx = static_cast<double>(term.k) * x;
      sum += 2.0 * (term.c.real() * cos_turns(kx) - term.c.imag() * sin_turns(kx));
    }
    return sum;
  }

  double fourier_phi_dx(double x) const noexcept {
    double sum = 0.0;
    for (const auto& term : fourier_) {
      if (term.k == 0) continue;
      const double k = static_cast<double>(term.k);
      const double kx = k * x;
      sum += -2.0 * 2.0 * std::numbers::pi * k *
             (term.c.real() * sin_turns(kx) + term.c.imag() * cos_turns(kx));
    }
    return sum;
  }

  // (a_min, a_max) = (-1/max phi', -1/min phi') so that 1 + a phi' > 0.
  void compute_range_from_derivative() {
    const auto ext = periodic_extrema([this](double x) { return base_perturbation_dx(x); }, 4096);
    a_min_ = ext.max_value > 0.0 ? -1.0 / ext.max_value : -std::numeric_limits<double>::infinity();
    a_max_ = ext.min_value < 0.0 ? -1.0 / ext.min_value : std::numeric_limits<double>::infinity();
  }

  FamilyKind kind_;
  double a_min_ = 0.0;
  double a_max_ = 0.0;
  int angle_terms_ = 0;
  std::vector<double> angle_weights_;
  std::vector<FourierTerm> fourier_;
};

/// F_{t,a}(x).
inline double eval_lift(const FamilySpec& fam, ParamPoint p, double x) {
  fam.require(p.a);
  return x + p.t + fam.perturbation(p.a, x);
}

namespace detail {

// Orbit state split into an integer part and a fraction in [0, 1), so long
// orbits keep full precision in the fractional position.
struct SplitPoint {
  double whole = 0.0;
  double frac = 0.0;

  static SplitPoint from(double x) {
    const double w = std::floor(x);
    return {w, x - w};
  }
  double value() const { return whole + frac; }
};

inline void advance(const FamilySpec& fam, ParamPoint p, SplitPoint& s) {
  const double next = s.frac + p.t + fam.perturbation(p.a, s.frac);
  const double shift = std::floor(next);
  s.whole += shift;
  s.frac = next - shift;
}

} // namespace detail

/// n-fold composition F_{t,a}^{n}(x).
inline double eval_iterate(const FamilySpec& fam, ParamPoint p, double x, long long n) {
  fam.require(p.a);
  if (n < 0) {
    throw ConfigError("iterate count must be non-negative");
  }
  if (n == 0) return x;
  auto s = detail::SplitPoint::from(x);
  for (long long i = 0; i < n; ++i) {
    detail::advance(fam, p, s);
  }
  return s.value();
}

/// (F^{n})'(x) by the chain rule along the orbit.
inline double eval_iterate_deriv(const FamilySpec& fam, ParamPoint p, double x, long long n) {
  fam.require(p.a);
  if (n < 1) {
    throw ConfigError("derivative of an iterate needs n >= 1");
  }
  double y = x;
  double d = 1.0;
  for (long long i = 0; i < n; ++i) {
    d *= 1.0 + fam.perturbation_dx(p.a, y);
    y = y + p.t + fam.perturbation(p.a, y);
  }
  return d;
}

} // namespace tongue_lab
