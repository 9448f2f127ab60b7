#pragma once

#include <random>
#include <vector>

#include "tongue_lab/circle_map.hpp"

namespace test_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261017);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline tongue_lab::FamilySpec sample_fourier() {
  return tongue_lab::FamilySpec::fourier({{1, {0.1, -0.4}}, {2, {0.0, 0.15}}, {3, {0.05, 0.02}}});
}

inline std::vector<tongue_lab::FamilySpec> all_families() {
  using tongue_lab::FamilySpec;
  return {FamilySpec::standard(), FamilySpec::blaschke(), FamilySpec::angle(), sample_fourier()};
}

// a drawn strictly inside the monotone range, away from the ends
inline double inner_a(const tongue_lab::FamilySpec& fam, double fraction = 0.9) {
  return uniform(fraction * fam.a_min(), fraction * fam.a_max());
}

} // namespace test_support
