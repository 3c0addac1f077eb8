#include "looksay/digit_string.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "looksay/errors.hpp"

namespace looksay {

void check_base(int base) {
  if (base < kMinBase || base > kMaxDigitBase) {
    throw InvalidInput("base must be between 2 and 10, got " + std::to_string(base));
  }
}

DigitString::DigitString(int base) : base_(base) { check_base(base); }

DigitString::DigitString(std::vector<Digit> digits, int base)
    : digits_(std::move(digits)), base_(base) {
  check_base(base);
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base) {
      throw InvalidInput("digit " + std::to_string(digits_[i]) + " at position " +
                         std::to_string(i) + " is not valid in base " + std::to_string(base));
    }
  }
}

DigitString DigitString::parse(std::string_view text, int base) {
  check_base(base);
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9' || c - '0' >= base) {
      throw InvalidInput("invalid character '" + std::string(1, c) + "' at position " +
                         std::to_string(i) + " for base " + std::to_string(base));
    }
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  DigitString s(base);
  s.digits_ = std::move(digits);
  return s;
}

DigitString DigitString::from_runs(std::span<const Run> runs, int base) {
  std::vector<Digit> digits;
  for (const Run& r : runs) {
    if (r.length == 0) throw InvalidInput("run of length zero");
    digits.insert(digits.end(), r.length, r.digit);
  }
  return DigitString(std::move(digits), base);
}

std::string DigitString::str() const {
  std::string out(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) out[i] = static_cast<char>('0' + digits_[i]);
  return out;
}

DigitString DigitString::substr(std::size_t pos, std::size_t count) const {
  if (pos > digits_.size()) throw std::out_of_range("DigitString::substr");
  const std::size_t n = std::min(count, digits_.size() - pos);
  DigitString s(base_);
  s.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   digits_.begin() + static_cast<std::ptrdiff_t>(pos + n));
  return s;
}

DigitString DigitString::operator+(const DigitString& rhs) const {
  if (base_ != rhs.base_) throw InvalidInput("cannot concatenate strings of different bases");
  DigitString s = *this;
  s.digits_.insert(s.digits_.end(), rhs.digits_.begin(), rhs.digits_.end());
  return s;
}

std::vector<Run> runs(std::span<const Digit> digits) {
  std::vector<Run> out;
  for (Digit d : digits) {
    if (!out.empty() && out.back().digit == d) {
      ++out.back().length;
    } else {
      out.push_back({d, 1});
    }
  }
  return out;
}

std::uint64_t max_run_length(std::span<const Digit> digits) {
  std::uint64_t best = 0;
  std::uint64_t cur = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    cur = (i > 0 && digits[i] == digits[i - 1]) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

TokenString TokenString::parse(std::string_view text) {
  std::vector<Token> tokens;
  if (text.empty()) return TokenString{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Token value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InvalidInput("invalid token '" + std::string(field) + "' at offset " +
                         std::to_string(pos));
    }
    tokens.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return TokenString(std::move(tokens));
}

std::string TokenString::str() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(tokens_[i]);
  }
  return out;
}

}  // namespace looksay
