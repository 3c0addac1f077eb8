#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace looksay {

/// "Counting sequence" descriptor: (count, digit) pairs, one per distinct
/// decimal digit present, ascending by digit.
class CountDescriptor {
 public:
  struct Entry {
    std::uint64_t count = 0;
    int digit = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CountDescriptor() = default;
  /// Validates: counts positive, digits in 0..9 and strictly increasing.
  explicit CountDescriptor(std::vector<Entry> entries);

  /// Tallies the decimal digits of `text` ("121355" -> 21 12 13 25).
  static CountDescriptor describe(std::string_view text);

  /// Counts in base 10 followed by their digit, concatenated: "21121325".
  [[nodiscard]] std::string render() const;
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }

  friend bool operator==(const CountDescriptor&, const CountDescriptor&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Describes the rendered form of d.
CountDescriptor counting_step(const CountDescriptor& d);

/// "Self-descriptive" vector: entry i counts occurrences of decimal digit i.
/// The index range is inherited from the previous vector and only ever
/// grows, when a multi-digit count introduces a digit beyond it.
using FrequencyVector = std::vector<std::uint64_t>;

/// Digit frequencies of `text`, indexed 0..(largest digit present).
FrequencyVector frequency_vector(std::string_view text);

FrequencyVector selfdesc_step(const FrequencyVector& v);

}  // namespace looksay
