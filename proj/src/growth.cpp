#include "looksay/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "looksay/errors.hpp"

namespace looksay {

namespace {

struct DigitNumerals {
  std::uint64_t base;
  template <class Push>
  void operator()(std::uint64_t count, Push&& push) const {
    std::array<Digit, 64> buf{};
    std::size_t len = 0;
    do {
      buf[len++] = static_cast<Digit>(count % base);
      count /= base;
    } while (count > 0);
    while (len > 0) push(static_cast<std::uint64_t>(buf[--len]));
  }
};

struct TokenNumerals {
  template <class Push>
  void operator()(std::uint64_t count, Push&& push) const {
    push(count);
  }
};

template <class Numerals>
class Cascade {
 public:
  Cascade(std::size_t iters, Numerals numerals, std::uint64_t budget)
      : levels_(iters), lengths_(iters + 1, 0), numerals_(numerals), budget_(budget) {}

  void push(std::size_t level, std::uint64_t symbol) {
    if (++pushed_ > budget_) {
      throw ResourceError("growth cascade exceeded its budget of " + std::to_string(budget_) +
                          " symbols");
    }
    ++lengths_[level];
    if (level == levels_.size()) return;
    Level& l = levels_[level];
    if (l.count > 0 && l.symbol == symbol) {
      ++l.count;
      return;
    }
    if (l.count > 0) flush(level);
    l.symbol = symbol;
    l.count = 1;
  }

  std::vector<std::uint64_t> finish() {
    for (std::size_t level = 0; level < levels_.size(); ++level) {
      if (levels_[level].count > 0) flush(level);
    }
    return lengths_;
  }

 private:
  struct Level {
    std::uint64_t symbol = 0;
    std::uint64_t count = 0;
  };

  void flush(std::size_t level) {
    const Level run = levels_[level];
    levels_[level].count = 0;
    numerals_(run.count, [&](std::uint64_t s) { push(level + 1, s); });
    push(level + 1, run.symbol);
  }

  std::vector<Level> levels_;
  std::vector<std::uint64_t> lengths_;
  Numerals numerals_;
  std::uint64_t budget_;
  std::uint64_t pushed_ = 0;
};

template <class Numerals, class Symbols>
std::vector<std::uint64_t> run_cascade(const Symbols& symbols, std::size_t iters,
                                       Numerals numerals, std::uint64_t budget) {
  Cascade<Numerals> cascade(iters, numerals, budget);
  for (auto s : symbols) cascade.push(0, static_cast<std::uint64_t>(s));
  return cascade.finish();
}

GrowthEstimate summarise(std::vector<std::uint64_t> lengths, int base, std::string seed) {
  GrowthEstimate g;
  g.base = base;
  g.seed = std::move(seed);
  g.lengths = std::move(lengths);
  for (std::size_t i = 1; i < g.lengths.size(); ++i) {
    g.ratios.push_back(static_cast<double>(g.lengths[i]) / static_cast<double>(g.lengths[i - 1]));
  }
  const std::size_t n = g.ratios.size();
  const std::size_t q = std::max<std::size_t>(1, n / 4);
  double log_sum = 0;
  for (std::size_t i = n - q; i < n; ++i) log_sum += std::log(g.ratios[i]);
  g.estimate = std::exp(log_sum / static_cast<double>(q));
  return g;
}

void check_growth_args(bool empty_seed, std::size_t iters) {
  if (empty_seed) throw InvalidInput("growth needs a non-empty seed");
  if (iters < 10) throw InvalidInput("growth needs at least 10 iterations");
}

}  // namespace

std::vector<std::uint64_t> iterate_lengths(const DigitString& seed, std::size_t iters,
                                           std::uint64_t budget) {
  return run_cascade(seed.digits(), iters,
                     DigitNumerals{static_cast<std::uint64_t>(seed.base())}, budget);
}

std::vector<std::uint64_t> iterate_lengths(const TokenString& seed, std::size_t iters,
                                           std::uint64_t budget) {
  return run_cascade(seed.tokens(), iters, TokenNumerals{}, budget);
}

GrowthEstimate empirical_growth(const DigitString& seed, std::size_t iters, std::uint64_t budget) {
  check_growth_args(seed.empty(), iters);
  return summarise(iterate_lengths(seed, iters, budget), seed.base(), seed.str());
}

GrowthEstimate empirical_growth(const TokenString& seed, std::size_t iters, std::uint64_t budget) {
  check_growth_args(seed.empty(), iters);
  return summarise(iterate_lengths(seed, iters, budget), 0, seed.str());
}

}  // namespace looksay
