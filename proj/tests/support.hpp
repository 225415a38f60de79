#pragma once

// Generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "bellab/core.hpp"

namespace bellab::test {

inline std::vector<std::int8_t> random_pm1(std::mt19937_64& g, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = (g() >> 63) ? 1 : -1;
  return v;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline OutcomeSequence sequence(AxisSymbol s, double angle, std::vector<std::int8_t> v) {
  return OutcomeSequence({Angle(angle), side_of(s)}, std::move(v), Provenance::Measured);
}

/// Naive mean of products.
inline double naive_correlation(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return static_cast<double>(s) / static_cast<double>(a.size());
}

}  // namespace bellab::test
