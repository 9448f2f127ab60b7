// Boundaries, width law and parabolic data for a few tongues of the
// standard family x + t + a sin(2 pi x).
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "tongue_lab/tongue_lab.hpp"

int main() {
  using namespace tongue_lab;
  const auto fam = FamilySpec::standard();

  struct Tongue {
    long long p, q;
  };
  for (const Tongue tg : {Tongue{0, 1}, Tongue{1, 2}, Tongue{1, 3}}) {
    std::vector<double> ladder;
    for (int k = 4; k >= 0; --k) ladder.push_back(0.02 * std::pow(2.0, -0.5 * k));
    const auto samples = trace_boundary(fam, tg.p, tg.q, ladder);
    const auto fit = fit_contact(samples);
    const auto pd = parabolic_data(guide_series(GuideKind::Standard, tg.p, tg.q), tg.q);

    std::printf("tongue %lld/%lld\n", tg.p, tg.q);
    for (const auto& s : samples) {
      std::printf("  a=%-10.6g t_left=%.15f t_right=%.15f width=%.6e\n", s.a, s.t_left, s.t_right, s.width);
    }
    std::printf("  fitted width ~ %.5f a^%.4f, predicted coefficient %.5f (|C| = %.6f)\n", fit.coefficient,
                fit.exponent, width_coefficient(pd), std::abs(pd.C));
  }

  const auto est = trans_estimate(fam, {0.3, 0.1}, 1000000);
  std::printf("Trans(F_{0.3,0.1}) ~ %.10f\n", est);
  return 0;
}
