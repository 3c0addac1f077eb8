#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "looksay/digit_string.hpp"

namespace looksay {

/// Upper bound on the number of candidate strings fixed_point_search will
/// examine before refusing with ResourceError.
inline constexpr std::uint64_t kDefaultFixedPointBudget = 200'000'000;

enum class FixedPointFilter {
  /// Drop strings that are a concatenation of two shorter fixed strings
  /// (22.11110 is fixed, but only because both halves are).
  irreducible,
  all,
};

/// Exhaustively lists the non-empty strings of length <= max_len that the
/// base-`base` step maps to itself, sorted lexicographically.
std::vector<DigitString> fixed_point_search(int base, std::size_t max_len,
                                            FixedPointFilter filter = FixedPointFilter::irreducible,
                                            std::uint64_t budget = kDefaultFixedPointBudget);

}  // namespace looksay
