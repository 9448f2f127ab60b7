#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/records.hpp"
#include "tongue_lab/trig.hpp"

using namespace tongue_lab;
using test_support::uniform;

constexpr double pi = std::numbers::pi;

TEST(TurnsTrig, MatchesLibmSine) {
  double worst = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double x = uniform(-50.0, 50.0);
    worst = std::max(worst, std::fabs(sin_turns(x) - std::sin(2.0 * pi * x)));
    worst = std::max(worst, std::fabs(cos_turns(x) - std::cos(2.0 * pi * x)));
  }
  // libm reference itself carries the rounding of 2*pi*x, about 50 * 2.2e-16
  EXPECT_LT(worst, 5e-14);
  EXPECT_EQ(sin_turns(0.0), 0.0);
  EXPECT_DOUBLE_EQ(sin_turns(0.25), 1.0);
  EXPECT_DOUBLE_EQ(cos_turns(0.5), -1.0);
  EXPECT_TRUE(std::isnan(sin_turns(HUGE_VAL)));
}

TEST(TurnsTrig, SmallArgumentsAreAccurate) {
  for (int i = 0; i < 10000; ++i) {
    const double x = uniform(-0.5, 0.5);
    EXPECT_NEAR(sin_turns(x), std::sin(2.0 * pi * x), 1e-15);
  }
}

TEST(EvalLift, TranslationWhenUnperturbed) {
  EXPECT_DOUBLE_EQ(eval_lift(FamilySpec::standard(), {0.25, 0.0}, 0.7), 0.95);
}

TEST(EvalLift, StandardQuarterPeriod) {
  EXPECT_NEAR(eval_lift(FamilySpec::standard(), {0.0, 0.1}, 0.25), 0.35, 1e-15);
}

TEST(EvalLift, BlaschkeClosedForm) {
  const double x = 0.1, a = 0.3;
  const double expected = x - std::atan(a * std::sin(2 * pi * x) / (1 - a * std::cos(2 * pi * x))) / pi;
  EXPECT_NEAR(eval_lift(FamilySpec::blaschke(), {0.0, a}, x), expected, 1e-15);
}

TEST(EvalLift, BlaschkeIsTheUnitCircleLiftOfTheRationalMap) {
  // z -> e^{2 pi i t} z (1 - a z)/(1 - a/z) restricted to |z| = 1
  const auto fam = FamilySpec::blaschke();
  for (int i = 0; i < 200; ++i) {
    const double t = uniform(-1, 1), a = test_support::inner_a(fam), x = uniform(0, 1);
    const std::complex<double> z = std::polar(1.0, 2 * pi * x);
    const auto w = std::polar(1.0, 2 * pi * t) * z * (1.0 - a * z) / (1.0 - a / z);
    const double y = eval_lift(fam, {t, a}, x);
    EXPECT_NEAR(std::abs(w - std::polar(1.0, 2 * pi * y)), 0.0, 1e-12);
  }
}

TEST(EvalLift, RejectsParameterOutsideRange) {
  const auto fam = FamilySpec::standard();
  EXPECT_THROW(eval_lift(fam, {0.0, 0.2}, 0.0), ParameterOutOfRange);
  EXPECT_THROW(eval_lift(fam, {0.0, -1.0 / (2 * pi)}, 0.0), ParameterOutOfRange);
  EXPECT_THROW(eval_iterate(fam, {0.0, 0.5}, 0.0, 3), ParameterOutOfRange);
}

TEST(EvalIterate, Examples) {
  const auto fam = FamilySpec::standard();
  EXPECT_DOUBLE_EQ(eval_iterate(fam, {0.5, 0.0}, 0.0, 4), 2.0);
  EXPECT_DOUBLE_EQ(eval_iterate(fam, {0.123, 0.1}, 0.77, 0), 0.77);
  EXPECT_NEAR(eval_iterate(fam, {0.0, 0.1}, 0.25, 2), 0.35 + 0.1 * std::sin(0.7 * pi), 1e-15);
  EXPECT_THROW(eval_iterate(fam, {0.0, 0.1}, 0.0, -1), ConfigError);
}

TEST(EvalIterateDeriv, Examples) {
  const auto fam = FamilySpec::standard();
  EXPECT_DOUBLE_EQ(eval_iterate_deriv(fam, {0.37, 0.0}, 0.81, 3), 1.0);
  EXPECT_NEAR(eval_iterate_deriv(fam, {0.0, 0.1}, 0.0, 1), 1.0 + 0.2 * pi, 1e-15);
  EXPECT_THROW(eval_iterate_deriv(fam, {0.0, 0.1}, 0.0, 0), ConfigError);
}

TEST(EvalIterateDeriv, AgreesWithFiniteDifferences) {
  for (const auto& fam : test_support::all_families()) {
    for (int i = 0; i < 100; ++i) {
      const ParamPoint p{uniform(-1, 1), test_support::inner_a(fam)};
      const double x = uniform(0, 1);
      const long long n = 1 + static_cast<long long>(uniform(0, 5));
      const double h = 1e-6;
      const double fd = (eval_iterate(fam, p, x + h, n) - eval_iterate(fam, p, x - h, n)) / (2 * h);
      const double d = eval_iterate_deriv(fam, p, x, n);
      EXPECT_NEAR(d, fd, 1e-6 * std::max(1.0, std::fabs(d))) << fam.name();
      EXPECT_GT(d, 0.0);
    }
  }
}

TEST(CircleMapProperties, CommutesWithUnitTranslation) {
  for (const auto& fam : test_support::all_families()) {
    for (int i = 0; i < 1000; ++i) {
      const ParamPoint p{uniform(-2, 2), test_support::inner_a(fam, 0.99)};
      const double x = uniform(-3, 3);
      EXPECT_NEAR(eval_lift(fam, p, x + 1) - eval_lift(fam, p, x) - 1, 0.0, 1e-12) << fam.name();
      const long long n = 1 + i % 7;
      EXPECT_NEAR(eval_iterate(fam, p, x + 1, n) - eval_iterate(fam, p, x, n) - 1, 0.0, 1e-10 * n);
    }
  }
}

TEST(CircleMapProperties, PerturbationIsPeriodic) {
  for (const auto& fam : test_support::all_families()) {
    for (int i = 0; i < 500; ++i) {
      const double x = uniform(-2, 2), a = test_support::inner_a(fam);
      EXPECT_NEAR(fam.perturbation(a, x + 1), fam.perturbation(a, x), 1e-14);
      EXPECT_NEAR(fam.base_perturbation(x + 1), fam.base_perturbation(x), 1e-14);
    }
  }
}

TEST(CircleMapProperties, MonotoneInsideTheRange) {
  for (const auto& fam : test_support::all_families()) {
    for (double a : {0.9499 * fam.a_min(), 0.5 * fam.a_min(), 0.5 * fam.a_max(), 0.9499 * fam.a_max()}) {
      for (int j = 0; j < 4096; ++j) {
        EXPECT_GT(eval_iterate_deriv(fam, {0.3, a}, j / 4096.0, 1), 0.0) << fam.name() << " a=" << a;
      }
    }
  }
}

TEST(CircleMapProperties, IteratesPreserveOrder) {
  for (const auto& fam : test_support::all_families()) {
    for (int i = 0; i < 300; ++i) {
      const ParamPoint p{uniform(-1, 1), test_support::inner_a(fam)};
      double x = uniform(0, 1), y = uniform(0, 1);
      if (x > y) std::swap(x, y);
      if (y - x < 1e-9) continue;
      EXPECT_LT(eval_iterate(fam, p, x, 5), eval_iterate(fam, p, y, 5));
    }
  }
}

TEST(FamilySpec, BuiltInRanges) {
  EXPECT_DOUBLE_EQ(FamilySpec::standard().a_max(), 1 / (2 * pi));
  EXPECT_DOUBLE_EQ(FamilySpec::standard().a_min(), -1 / (2 * pi));
  EXPECT_DOUBLE_EQ(FamilySpec::blaschke().a_max(), 1.0 / 3.0);
  const auto angle = FamilySpec::angle();
  // phi' peaks at x = 0 with value 2 pi sum_{n<=12} 1/(n-1)!
  double peak = 0.0, fact = 1.0;
  for (int n = 1; n <= 12; ++n) {
    if (n > 1) fact *= n - 1;
    peak += 1.0 / fact;
  }
  EXPECT_NEAR(angle.a_min(), -1.0 / (2 * pi * peak), 1e-12);
  EXPECT_NEAR(angle.a_min(), -0.058550, 1e-6);
  EXPECT_NEAR(angle.a_max(), 0.184215, 1e-6);
}

TEST(FamilySpec, BlaschkeMonotonicityBoundIsSharp) {
  // beyond |a| = 1/3 the lift has negative slope at x = 0
  const auto fam = FamilySpec::blaschke();
  EXPECT_LT(1.0 + fam.perturbation_dx(0.34, 0.0), 0.0);
  EXPECT_GT(1.0 + fam.perturbation_dx(0.33, 0.0), 0.0);
}

TEST(FamilySpec, BlaschkeBasePerturbationIsTheDerivativeInA) {
  const auto fam = FamilySpec::blaschke();
  for (int j = 0; j < 200; ++j) {
    const double x = j / 200.0;
    const double h = 1e-5;
    const double fd = (fam.perturbation(h, x) - fam.perturbation(-h, x)) / (2 * h);
    EXPECT_NEAR(fd, fam.base_perturbation(x), 1e-8);
    EXPECT_NEAR(fam.base_perturbation(x), -std::sin(2 * pi * x) / pi, 1e-15);
  }
}

TEST(FamilySpec, AngleSeries) {
  const auto fam = FamilySpec::angle(12);
  for (int j = 0; j < 100; ++j) {
    const double x = j / 100.0;
    double phi = 0.0, fact = 1.0;
    for (int n = 1; n <= 12; ++n) {
      fact *= n;
      phi += std::sin(2 * pi * n * x) / fact;
    }
    EXPECT_NEAR(fam.base_perturbation(x), phi, 1e-14);
  }
  EXPECT_THROW(FamilySpec::angle(0), ConfigError);
}

TEST(FamilySpec, FourierTermsAndConstant) {
  const auto fam = FamilySpec::fourier({{0, {0.3, 0.0}}, {2, {0.1, 0.2}}});
  for (int j = 0; j < 50; ++j) {
    const double x = j / 50.0;
    const std::complex<double> c(0.1, 0.2);
    const double expected = 0.3 + 2.0 * (c * std::polar(1.0, 4 * pi * x)).real();
    EXPECT_NEAR(fam.base_perturbation(x), expected, 1e-14);
  }
  EXPECT_THROW(FamilySpec::fourier({{-1, {1.0, 0.0}}}), ConfigError);
}

TEST(FamilySpec, FromConfig) {
  EXPECT_EQ(family_from_config(Json::parse(R"({"kind":"standard"})")).kind(), FamilyKind::Standard);
  EXPECT_EQ(family_from_config(Json::parse(R"({"kind":"angle","angle_terms":5})")).angle_terms(), 5);
  const auto fam = family_from_config(Json::parse(R"({"kind":"fourier","fourier":[[1,0.0,-0.5]]})"));
  // c_1 = -i/2 gives phi = sin(2 pi x)
  EXPECT_NEAR(fam.base_perturbation(0.25), 1.0, 1e-15);
  EXPECT_NEAR(fam.a_max(), 1 / (2 * pi), 1e-12);
  EXPECT_THROW(family_from_config(Json::parse(R"({"kind":"tent"})")), ConfigError);
  EXPECT_THROW(family_from_config(Json::parse(R"({"kind":"fourier"})")), ConfigError);
  EXPECT_THROW(family_from_config(Json::parse(R"({"fourier":[]})")), ConfigError);
  const auto round_trip = family_from_config(to_config(test_support::sample_fourier()));
  EXPECT_DOUBLE_EQ(round_trip.base_perturbation(0.3), test_support::sample_fourier().base_perturbation(0.3));
}
