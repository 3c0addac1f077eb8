#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "looksay/digit_string.hpp"

namespace looksay {

/// Appends the base-`base` numeral of n, most significant digit first,
/// without leading zeros. n must be positive.
void append_numeral(std::vector<Digit>& out, std::uint64_t n, int base);

/// Number of digits in the base-`base` numeral of n (n > 0).
std::size_t numeral_width(std::uint64_t n, int base);

/// One look-and-say step in the string's own base: each run (d, n) becomes
/// numeral(n) followed by d. The empty string maps to itself.
DigitString look_and_say_step(const DigitString& s);

/// Same step with an explicit base. Digits are re-validated against `base`
/// and the first offending position is reported via InvalidInput.
DigitString look_and_say_step(const DigitString& s, int base);

/// Step computed directly from a run list, so inputs with very long runs
/// never need to be materialised. Adjacent runs must differ in digit.
DigitString look_and_say_step(std::span<const Run> runs, int base);

/// Base-infinity step: each run (v, n) of equal tokens becomes the token
/// pair n, v.
TokenString token_step(const TokenString& t);

/// The iterates s, step(s), ..., step^n(s).
struct Trajectory {
  std::vector<DigitString> iterates;

  [[nodiscard]] std::vector<std::size_t> lengths() const;
  [[nodiscard]] const DigitString& back() const { return iterates.back(); }
};

Trajectory iterate(const DigitString& s, std::size_t n);

/// step^n(s) without keeping the intermediate strings.
DigitString nth_iterate(const DigitString& s, std::size_t n);

/// Syntactic maturity test for base-3 strings: every 0-run has length at
/// most 1, every 2-run at most 3 and every 1-run at most 4. Any string two
/// or more steps removed from one with runs <= 7 passes.
bool is_run_bounded(std::span<const Digit> digits);
inline bool is_run_bounded(const DigitString& s) { return is_run_bounded(s.digits()); }

/// Run bounded and no run of length 4 or more.
bool is_ancient(std::span<const Digit> digits);
inline bool is_ancient(const DigitString& s) { return is_ancient(s.digits()); }

}  // namespace looksay
