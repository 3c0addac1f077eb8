#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "looksay/digit_string.hpp"

namespace looksay {

/// Cap on the total number of symbols pushed through all levels of the
/// cascade (roughly 3.5x the final length for growth near 1.3).
inline constexpr std::uint64_t kDefaultGrowthBudget = 20'000'000'000ULL;

struct GrowthEstimate {
  int base = 0;  ///< 0 for token (base infinity) mode
  std::string seed;
  std::vector<std::uint64_t> lengths;  ///< lengths[i] = |A_i|, i = 0..iters
  std::vector<double> ratios;          ///< ratios[i-1] = |A_i| / |A_{i-1}|
  double estimate = 0;                 ///< geometric mean of the last quarter of ratios
};

/// Length sequence of the first `iters` iterates without materialising
/// them: a chain of run-length encoders, one per iteration, each feeding
/// its output symbol by symbol into the next. Memory is O(iters).
std::vector<std::uint64_t> iterate_lengths(const DigitString& seed, std::size_t iters,
                                           std::uint64_t budget = kDefaultGrowthBudget);
std::vector<std::uint64_t> iterate_lengths(const TokenString& seed, std::size_t iters,
                                           std::uint64_t budget = kDefaultGrowthBudget);

/// Needs iters >= 10 and a non-empty seed. Throws ResourceError when the
/// cascade would push more than `budget` symbols.
GrowthEstimate empirical_growth(const DigitString& seed, std::size_t iters,
                                std::uint64_t budget = kDefaultGrowthBudget);
GrowthEstimate empirical_growth(const TokenString& seed, std::size_t iters,
                                std::uint64_t budget = kDefaultGrowthBudget);

}  // namespace looksay
