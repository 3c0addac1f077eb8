#include "looksay/descriptors.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "looksay/errors.hpp"

namespace looksay {

namespace {

using Tally = std::array<std::uint64_t, 10>;

void tally_decimal(Tally& t, std::uint64_t n) {
  do {
    ++t[n % 10];
    n /= 10;
  } while (n > 0);
}

CountDescriptor from_tally(const Tally& t) {
  std::vector<CountDescriptor::Entry> entries;
  for (int d = 0; d < 10; ++d) {
    if (t[static_cast<std::size_t>(d)] > 0) entries.push_back({t[static_cast<std::size_t>(d)], d});
  }
  return CountDescriptor(std::move(entries));
}

}  // namespace

CountDescriptor::CountDescriptor(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.count == 0) throw InvalidInput("descriptor counts must be positive");
    if (e.digit < 0 || e.digit > 9) throw InvalidInput("descriptor digit out of range");
    if (i > 0 && entries_[i - 1].digit >= e.digit) {
      throw InvalidInput("descriptor digits must be strictly increasing");
    }
  }
}

CountDescriptor CountDescriptor::describe(std::string_view text) {
  Tally t{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw InvalidInput("invalid character at position " + std::to_string(i));
    }
    ++t[static_cast<std::size_t>(c - '0')];
  }
  return from_tally(t);
}

std::string CountDescriptor::render() const {
  std::string out;
  for (const Entry& e : entries_) {
    out += std::to_string(e.count);
    out += static_cast<char>('0' + e.digit);
  }
  return out;
}

CountDescriptor counting_step(const CountDescriptor& d) {
  Tally t{};
  for (const auto& e : d.entries()) {
    tally_decimal(t, e.count);
    ++t[static_cast<std::size_t>(e.digit)];
  }
  return from_tally(t);
}

FrequencyVector frequency_vector(std::string_view text) {
  FrequencyVector v;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw InvalidInput("invalid character at position " + std::to_string(i));
    }
    const auto d = static_cast<std::size_t>(c - '0');
    if (v.size() <= d) v.resize(d + 1, 0);
    ++v[d];
  }
  return v;
}

FrequencyVector selfdesc_step(const FrequencyVector& v) {
  Tally t{};
  for (std::uint64_t x : v) tally_decimal(t, x);
  std::size_t width = v.size();
  for (std::size_t d = 0; d < t.size(); ++d) {
    if (t[d] > 0) width = std::max(width, d + 1);
  }
  FrequencyVector out(width, 0);
  for (std::size_t d = 0; d < t.size() && d < width; ++d) out[d] = t[d];
  return out;
}

}  // namespace looksay
