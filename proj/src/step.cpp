#include "looksay/step.hpp"

#include <array>
#include <string>

#include "looksay/errors.hpp"

namespace looksay {

std::size_t numeral_width(std::uint64_t n, int base) {
  std::size_t width = 0;
  do {
    ++width;
    n /= static_cast<std::uint64_t>(base);
  } while (n > 0);
  return width;
}

void append_numeral(std::vector<Digit>& out, std::uint64_t n, int base) {
  std::array<Digit, 64> buf{};
  std::size_t len = 0;
  const auto b = static_cast<std::uint64_t>(base);
  do {
    buf[len++] = static_cast<Digit>(n % b);
    n /= b;
  } while (n > 0);
  while (len > 0) out.push_back(buf[--len]);
}

namespace {

std::vector<Digit> step_digits(std::span<const Digit> in, int base) {
  std::vector<Digit> out;
  out.reserve(in.size() + in.size() / 2 + 2);
  std::size_t i = 0;
  while (i < in.size()) {
    std::size_t j = i + 1;
    while (j < in.size() && in[j] == in[i]) ++j;
    append_numeral(out, j - i, base);
    out.push_back(in[i]);
    i = j;
  }
  return out;
}

}  // namespace

DigitString look_and_say_step(const DigitString& s) {
  return DigitString(step_digits(s.digits(), s.base()), s.base());
}

DigitString look_and_say_step(const DigitString& s, int base) {
  check_base(base);
  const auto digits = s.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= base) {
      throw InvalidInput("digit " + std::to_string(digits[i]) + " at position " +
                         std::to_string(i) + " is not valid in base " + std::to_string(base));
    }
  }
  return DigitString(step_digits(digits, base), base);
}

DigitString look_and_say_step(std::span<const Run> run_list, int base) {
  check_base(base);
  std::vector<Digit> out;
  for (std::size_t i = 0; i < run_list.size(); ++i) {
    const Run& r = run_list[i];
    if (r.length == 0) throw InvalidInput("run " + std::to_string(i) + " has length zero");
    if (r.digit >= base) {
      throw InvalidInput("run " + std::to_string(i) + " has digit " + std::to_string(r.digit) +
                         " outside base " + std::to_string(base));
    }
    if (i > 0 && run_list[i - 1].digit == r.digit) {
      throw InvalidInput("runs " + std::to_string(i - 1) + " and " + std::to_string(i) +
                         " share a digit");
    }
    append_numeral(out, r.length, base);
    out.push_back(r.digit);
  }
  return DigitString(std::move(out), base);
}

TokenString token_step(const TokenString& t) {
  const auto in = t.tokens();
  std::vector<Token> out;
  out.reserve(in.size() * 2);
  std::size_t i = 0;
  while (i < in.size()) {
    std::size_t j = i + 1;
    while (j < in.size() && in[j] == in[i]) ++j;
    out.push_back(j - i);
    out.push_back(in[i]);
    i = j;
  }
  return TokenString(std::move(out));
}

std::vector<std::size_t> Trajectory::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(iterates.size());
  for (const auto& s : iterates) out.push_back(s.size());
  return out;
}

Trajectory iterate(const DigitString& s, std::size_t n) {
  Trajectory t;
  t.iterates.reserve(n + 1);
  t.iterates.push_back(s);
  for (std::size_t i = 0; i < n; ++i) t.iterates.push_back(look_and_say_step(t.iterates.back()));
  return t;
}

DigitString nth_iterate(const DigitString& s, std::size_t n) {
  DigitString cur = s;
  for (std::size_t i = 0; i < n; ++i) cur = look_and_say_step(cur);
  return cur;
}

bool is_run_bounded(std::span<const Digit> digits) {
  // Caps indexed by digit value: 0-runs <= 1, 1-runs <= 4, 2-runs <= 3.
  constexpr std::array<std::uint64_t, 3> caps{1, 4, 3};
  for (const Run& r : runs(digits)) {
    if (r.digit > 2 || r.length > caps[r.digit]) return false;
  }
  return true;
}

bool is_ancient(std::span<const Digit> digits) {
  return is_run_bounded(digits) && max_run_length(digits) < 4;
}

}  // namespace looksay
