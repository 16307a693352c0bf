#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "repbasis/intset.hpp"

namespace repbasis::testing {

/// Set of up to `max_size` distinct integers drawn from [lo, hi].
inline FiniteIntSet random_set(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  std::vector<Int> values;
  const std::size_t n = size_dist(rng);
  for (std::size_t i = 0; i < n; ++i) values.emplace_back(value(rng));
  return FiniteIntSet(std::move(values));
}

inline FiniteIntSet ints(std::initializer_list<std::int64_t> values) {
  std::vector<Int> out(values.begin(), values.end());
  return FiniteIntSet(std::move(out));
}

inline std::vector<Int> counts(std::initializer_list<std::int64_t> values) {
  return std::vector<Int>(values.begin(), values.end());
}

}  // namespace repbasis::testing
