#include "looksay/fixed_points.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "looksay/errors.hpp"
#include "looksay/step.hpp"

namespace looksay {

namespace {

// Streams step(s) and compares it against s, bailing out at the first
// mismatch. Most candidates fail on the first emitted digit.
bool maps_to_itself(const std::vector<Digit>& s, int base) {
  const std::size_t n = s.size();
  std::size_t out = 0;
  std::array<Digit, 64> numeral{};
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && s[j] == s[i]) ++j;
    std::uint64_t len = j - i;
    std::size_t w = 0;
    do {
      numeral[w++] = static_cast<Digit>(len % static_cast<std::uint64_t>(base));
      len /= static_cast<std::uint64_t>(base);
    } while (len > 0);
    while (w > 0) {
      if (out >= n || s[out] != numeral[--w]) return false;
      ++out;
    }
    if (out >= n || s[out] != s[i]) return false;
    ++out;
    i = j;
  }
  return out == n;
}

}  // namespace

std::vector<DigitString> fixed_point_search(int base, std::size_t max_len, FixedPointFilter filter,
                                            std::uint64_t budget) {
  check_base(base);
  if (max_len < 1) throw InvalidInput("max_len must be at least 1");

  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (layer > budget / static_cast<std::uint64_t>(base)) {
      throw ResourceError("fixed point search space exceeds budget of " + std::to_string(budget));
    }
    layer *= static_cast<std::uint64_t>(base);
    total += layer;
    if (total > budget) {
      throw ResourceError("fixed point search space of " + std::to_string(total) +
                          " strings exceeds budget of " + std::to_string(budget));
    }
  }

  std::vector<DigitString> found;
  const auto top = static_cast<Digit>(base - 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Digit> s(len, 0);
    while (true) {
      if (maps_to_itself(s, base)) found.emplace_back(s, base);
      std::size_t k = len;
      while (k > 0 && s[k - 1] == top) s[--k] = 0;
      if (k == 0) break;
      ++s[k - 1];
    }
  }
  std::sort(found.begin(), found.end());
  if (filter == FixedPointFilter::all) return found;

  // Every proper piece is shorter than max_len, so `found` already holds
  // any fixed halves.
  auto is_fixed = [&](const DigitString& s) {
    return std::binary_search(found.begin(), found.end(), s);
  };
  std::vector<DigitString> irreducible;
  for (const auto& s : found) {
    bool composite = false;
    for (std::size_t p = 1; p < s.size() && !composite; ++p) {
      composite = is_fixed(s.substr(0, p)) && is_fixed(s.substr(p));
    }
    if (!composite) irreducible.push_back(s);
  }
  return irreducible;
}

}  // namespace looksay
