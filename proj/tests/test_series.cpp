#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tongue_lab/series.hpp"

using namespace tongue_lab;
using test_support::uniform;

constexpr double pi = std::numbers::pi;

namespace {

TruncatedSeries make(std::vector<Complex> c, int order) { return TruncatedSeries(std::move(c), order); }

void expect_coeffs(const TruncatedSeries& s, const std::vector<Complex>& expected, double tol) {
  for (int k = 0; k <= s.order(); ++k) {
    const Complex e = k < static_cast<int>(expected.size()) ? expected[static_cast<std::size_t>(k)] : Complex(0.0);
    EXPECT_NEAR(std::abs(s[k] - e), 0.0, tol) << "k=" << k;
  }
}

TruncatedSeries random_cubic(int order) {
  TruncatedSeries s(order);
  for (int k = 1; k <= 3; ++k) s[k] = Complex(uniform(-1, 1), uniform(-1, 1));
  return s;
}

} // namespace

TEST(SeriesMul, Examples) {
  const int n = 6;
  const auto z = TruncatedSeries::identity(n);
  expect_coeffs(series_mul(z, z), {0, 0, 1}, 0.0);
  const auto f = make({1.5, Complex(0, 2), -3}, n);
  expect_coeffs(series_mul(f, TruncatedSeries::constant(1.0, n)), f.coeffs(), 0.0);
  expect_coeffs(series_mul(make({1, 1}, n), make({1, -1}, n)), {1, 0, -1}, 0.0);
  EXPECT_THROW(series_mul(TruncatedSeries(4), TruncatedSeries(5)), OrderMismatch);
}

TEST(SeriesMul, FlagsDroppedTerms) {
  const auto zn = make({0, 0, 0, 1}, 3);
  EXPECT_FALSE(series_mul(zn, TruncatedSeries::constant(2.0, 3)).truncated());
  EXPECT_TRUE(series_mul(zn, TruncatedSeries::identity(3)).truncated());
  EXPECT_TRUE(make({0, 0, 0, 0, 1}, 3).truncated());
}

TEST(SeriesExp, Examples) {
  const int n = 12;
  expect_coeffs(series_exp(TruncatedSeries(n)), {1}, 0.0);
  const auto e = series_exp(TruncatedSeries::identity(n));
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    EXPECT_NEAR(std::abs(e[k] - 1.0 / fact), 0.0, 1e-16) << k;
  }
  const auto epi = series_exp(series_scale(TruncatedSeries::identity(n), pi));
  EXPECT_NEAR(std::abs(epi[2] - pi * pi / 2), 0.0, 1e-14);
  // a constant term factors out as a scalar
  const auto shifted = series_exp(make({Complex(0.3, 0.4), 1}, n));
  for (int k = 0; k <= n; ++k) EXPECT_NEAR(std::abs(shifted[k] - std::exp(Complex(0.3, 0.4)) * e[k]), 0.0, 1e-15);
}

TEST(SeriesExp, MatchesProductOfExponentials) {
  const int n = 16;
  for (int i = 0; i < 20; ++i) {
    const auto f = random_cubic(n);
    const auto g = random_cubic(n);
    const auto lhs = series_exp(series_add(f, g));
    const auto rhs = series_mul(series_exp(f), series_exp(g));
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-11);
  }
}

TEST(SeriesCompose, Examples) {
  const int n = 8;
  const auto f = make({0.5, Complex(1, 1), 2, -1}, n);
  expect_coeffs(series_compose(f, TruncatedSeries::identity(n)), f.coeffs(), 0.0);
  expect_coeffs(series_compose(make({0, 0, 1}, n), make({0, 1, 1}, n)), {0, 0, 1, 2, 1}, 0.0);
  EXPECT_THROW(series_compose(f, make({0.1, 1}, n)), NonvanishingConstantTerm);
  EXPECT_THROW(series_compose(f, TruncatedSeries::identity(n + 1)), OrderMismatch);
}

TEST(SeriesCompose, IsAssociative) {
  const int n = 10;
  for (int i = 0; i < 100; ++i) {
    const auto f = random_cubic(n), g = random_cubic(n), h = random_cubic(n);
    const auto lhs = series_compose(series_compose(f, g), h);
    const auto rhs = series_compose(f, series_compose(g, h));
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-12 * std::max(1.0, std::abs(lhs[k])));
  }
}

TEST(GuideSeries, Examples) {
  const auto s = guide_series(GuideKind::Standard, 0, 1, 8);
  const std::vector<Complex> head{0, 1, pi, pi * pi / 2, pi * pi * pi / 6};
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(std::abs(s[k] - head[k]), 0.0, 1e-14) << k;
  const auto b = guide_series(GuideKind::Blaschke, 1, 2, 8);
  expect_coeffs(b, {0, -1, 1}, 1e-15);
  int nonzero = 0;
  for (int k = 0; k <= b.order(); ++k) nonzero += b[k] != Complex(0.0);
  EXPECT_EQ(nonzero, 2);
  const auto third = guide_series(GuideKind::Standard, 1, 3);
  EXPECT_NEAR(std::abs(third[1] - std::polar(1.0, 2 * pi / 3)), 0.0, 1e-15);
  EXPECT_THROW(guide_series(GuideKind::Standard, 2, 4), NonCoprime);
}

TEST(SeriesProperties, GuideIdentities) {
  for (auto kind : {GuideKind::Standard, GuideKind::Blaschke}) {
    for (long long q = 1; q <= 8; ++q) {
      for (long long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const auto g = guide_series(kind, p, q);
        EXPECT_EQ(g[0], Complex(0.0));
        EXPECT_LT(std::abs(g[1] - std::polar(1.0, 2 * pi * p / q)), 1e-12);
      }
    }
  }
}

TEST(ParabolicData, StandardHalf) {
  const auto pd = parabolic_data(guide_series(GuideKind::Standard, 1, 2, 8), 2);
  EXPECT_EQ(pd.nu, 1);
  EXPECT_EQ(pd.leading_index, 3);
  EXPECT_EQ(pd.p, 1);
  EXPECT_NEAR(std::abs(pd.C - Complex(-pi * pi, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(width_coefficient(pd), pi, 1e-12);
}

TEST(ParabolicData, StandardHalfAgainstClosedForm) {
  // s(s(z)) = z exp(pi z (1 - e^{pi z})) for s(z) = -z e^{pi z}
  const int n = 12;
  const auto z = TruncatedSeries::identity(n);
  const auto epz = series_exp(series_scale(z, pi));
  auto inner = series_mul(series_scale(z, pi), series_add(TruncatedSeries::constant(1.0, n), series_scale(epz, -1.0)));
  const auto closed = series_mul(z, series_exp(inner));
  const auto iter = series_iterate(guide_series(GuideKind::Standard, 1, 2, n), 2);
  for (int k = 0; k <= n; ++k) EXPECT_NEAR(std::abs(iter[k] - closed[k]), 0.0, 1e-9 * std::max(1.0, std::abs(closed[k])));
}

TEST(ParabolicData, BlaschkeHalf) {
  const auto b = guide_series(GuideKind::Blaschke, 1, 2, 8);
  expect_coeffs(series_iterate(b, 2), {0, 1, 0, -2, 1}, 1e-15);
  const auto pd = parabolic_data(b, 2);
  EXPECT_EQ(pd.nu, 1);
  EXPECT_EQ(pd.leading_index, 3);
  EXPECT_NEAR(std::abs(pd.C - Complex(-2.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(width_coefficient(pd), 2 / pi, 1e-15);
}

TEST(ParabolicData, StandardThird) {
  const auto pd = parabolic_data(guide_series(GuideKind::Standard, 1, 3), 3);
  EXPECT_EQ(pd.leading_index, 4);
  const Complex pinned(38.757845850374785, 13.426111640954277);
  EXPECT_NEAR(std::abs(pd.C - pinned) / std::abs(pinned), 0.0, 1e-12);
  EXPECT_NEAR(width_coefficient(pd), 2 * std::abs(pinned) / (3 * pi), 1e-11);
}

TEST(ParabolicData, ZeroTongue) {
  const auto pd = parabolic_data(guide_series(GuideKind::Standard, 0, 1), 1);
  EXPECT_EQ(pd.leading_index, 2);
  EXPECT_NEAR(std::abs(pd.C - Complex(pi, 0.0)), 0.0, 1e-14);
  EXPECT_NEAR(width_coefficient(pd), 2.0, 1e-14);
}

TEST(ParabolicData, Errors) {
  const int n = 12;
  EXPECT_THROW(parabolic_data(make({0, 1.1, 1}, n), 1), NotRootOfUnity);
  EXPECT_THROW(parabolic_data(make({0, std::polar(1.0, 0.3), 1}, n), 2), NotRootOfUnity);
  EXPECT_THROW(parabolic_data(make({0, std::polar(1.0, 2 * pi / 3)}, n), 3), IdentityToTruncation);
  EXPECT_THROW(parabolic_data(guide_series(GuideKind::Standard, 1, 2, 5), 2), InsufficientOrder);
  // multiplier 1 read as a square root of unity: leading index 2 is not 1 mod 2
  EXPECT_THROW(parabolic_data(make({0, 1, 1}, n), 2), NonresonantLeadingTerm);
  EXPECT_THROW(parabolic_data(make({0.1, 1, 1}, n), 1), NonvanishingConstantTerm);
  ParabolicData pd;
  pd.nu = 2;
  pd.q = 2;
  pd.C = 1.0;
  EXPECT_THROW(width_coefficient(pd), MultiplicityNotOne);
}

TEST(SeriesProperties, TruncationStability) {
  for (auto kind : {GuideKind::Standard, GuideKind::Blaschke}) {
    for (long long q = 1; q <= 8; ++q) {
      const int n = static_cast<int>(2 * q + 2);
      const auto a = parabolic_data(guide_series(kind, 1, q, n), q);
      const auto b = parabolic_data(guide_series(kind, 1, q, n + 8), q);
      EXPECT_EQ(a.nu, b.nu);
      EXPECT_LE(std::abs(a.C - b.C), 1e-10 * std::abs(b.C)) << to_string(kind) << " q=" << q;
    }
  }
}

TEST(SeriesProperties, RepeatedAndBinaryIteratesAgree) {
  for (auto kind : {GuideKind::Standard, GuideKind::Blaschke}) {
    for (long long q = 1; q <= 8; ++q) {
      for (long long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const auto g = guide_series(kind, p, q);
        const auto pd = parabolic_data(g, q);
        const auto a = series_iterate(g, q);
        const auto b = series_iterate_binary(g, q);
        // orders up to 2q + 2 feed parabolic_data; beyond that the
        // coefficients come from cancelling sums and lose digits
        for (int k = 0; k <= 2 * q + 2; ++k) {
          const double w = std::pow(pd.scale, k - 1);
          EXPECT_LE(std::abs(a[k] - b[k]) * w, 1e-11 * std::max(1.0, std::abs(a[k]) * w))
              << to_string(kind) << " " << p << "/" << q << " k=" << k;
        }
      }
    }
  }
  EXPECT_THROW(series_iterate(TruncatedSeries::identity(4), 0), ConfigError);
}

TEST(SeriesProperties, SingleCycleOfPetals) {
  for (auto kind : {GuideKind::Standard, GuideKind::Blaschke}) {
    for (long long q = 1; q <= 8; ++q) {
      for (long long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const auto pd = parabolic_data(guide_series(kind, p, q), q);
        EXPECT_EQ(pd.nu, 1) << to_string(kind) << " " << p << "/" << q;
        EXPECT_EQ(pd.leading_index, q + 1);
        EXPECT_EQ(pd.p, p);
        EXPECT_LT(pd.max_rejected, pd.threshold);
        EXPECT_GT(std::abs(pd.C), 0.0);
      }
    }
  }
}
