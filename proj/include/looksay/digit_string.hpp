#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace looksay {

using Digit = std::uint8_t;
using Token = std::uint64_t;

inline constexpr int kMinBase = 2;
inline constexpr int kMaxDigitBase = 10;

/// One maximal block of a repeated digit.
struct Run {
  Digit digit = 0;
  std::uint64_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A finite string over the alphabet {0, ..., base-1}.
///
/// Every digit is checked against the base on construction, so a
/// DigitString in hand is always well formed. Text form is one ASCII
/// character per digit, which limits bases to 2..10; larger alphabets go
/// through TokenString.
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(int base);
  DigitString(std::vector<Digit> digits, int base);

  /// Parses contiguous ASCII digits. Throws InvalidInput naming the first
  /// offending position.
  static DigitString parse(std::string_view text, int base = 3);

  /// Expands a run list. Runs of length zero are rejected; adjacent runs
  /// with equal digits are accepted and simply merge.
  static DigitString from_runs(std::span<const Run> runs, int base);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] int base() const noexcept { return base_; }
  [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return digits_.empty(); }
  [[nodiscard]] Digit operator[](std::size_t i) const { return digits_[i]; }
  [[nodiscard]] Digit front() const { return digits_.front(); }
  [[nodiscard]] Digit back() const { return digits_.back(); }

  /// Substring [pos, pos+count).
  [[nodiscard]] DigitString substr(std::size_t pos, std::size_t count = std::string::npos) const;

  /// Concatenation; both operands must share a base.
  [[nodiscard]] DigitString operator+(const DigitString& rhs) const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend std::strong_ordering operator<=>(const DigitString& a, const DigitString& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(),
                                                  b.digits_.begin(), b.digits_.end());
  }

 private:
  std::vector<Digit> digits_;
  int base_ = 3;
};

/// Run decomposition. Concatenating the runs reproduces the input and
/// adjacent runs always differ in digit.
std::vector<Run> runs(std::span<const Digit> digits);
inline std::vector<Run> runs(const DigitString& s) { return runs(s.digits()); }

/// Length of the longest run, 0 for the empty string.
std::uint64_t max_run_length(std::span<const Digit> digits);
inline std::uint64_t max_run_length(const DigitString& s) { return max_run_length(s.digits()); }

/// Atomic-symbol string for "base infinity" look-and-say: counts are kept
/// as whole tokens and never expanded into digits.
class TokenString {
 public:
  TokenString() = default;
  explicit TokenString(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  /// Comma-separated decimal integers, e.g. "1,10,1,5". Empty text gives
  /// the empty string.
  static TokenString parse(std::string_view text);
  [[nodiscard]] std::string str() const;

  [[nodiscard]] std::span<const Token> tokens() const noexcept { return tokens_; }
  [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
  [[nodiscard]] bool empty() const noexcept { return tokens_.empty(); }

  friend bool operator==(const TokenString&, const TokenString&) = default;

 private:
  std::vector<Token> tokens_;
};

void check_base(int base);

}  // namespace looksay
