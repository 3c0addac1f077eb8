#include "looksay/cosmology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "looksay/errors.hpp"
#include "looksay/step.hpp"

namespace looksay {

bool is_essential_ancient(const DigitString& s) {
  if (s.base() != 3 || s.empty() || s.size() > kEssentialMaxLength) return false;
  if (max_run_length(s) >= 4) return false;
  const auto d = s.digits();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0) return false;
  }
  return true;
}

namespace {

void extend(std::vector<Digit>& prefix, std::size_t length, std::size_t run,
            std::vector<DigitString>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix, 3);
    return;
  }
  const bool last = prefix.size() + 1 == length;
  if (last) {
    prefix.push_back(0);
    out.emplace_back(prefix, 3);
    prefix.pop_back();
  }
  for (Digit d : {Digit{1}, Digit{2}}) {
    const bool same = !prefix.empty() && prefix.back() == d;
    const std::size_t next_run = same ? run + 1 : 1;
    if (next_run > 3) continue;
    prefix.push_back(d);
    extend(prefix, length, next_run, out);
    prefix.pop_back();
  }
}

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

std::vector<DigitString> enumerate_essential_ancient(std::size_t length) {
  if (length < 1 || length > kEssentialMaxLength) {
    throw InvalidInput("essential ancient strings have length 1.." +
                       std::to_string(kEssentialMaxLength));
  }
  std::vector<DigitString> out;
  std::vector<Digit> prefix;
  prefix.reserve(length);
  extend(prefix, length, 0, out);
  return out;
}

BigInt f_closed(unsigned n) {
  if (n < 2) throw InvalidInput("closed form is stated for n >= 2");
  const long nn = n;
  const long k_lo = (nn + 3) / 4;
  const long r_hi = nn / 4;
  BigInt sum = 0;
  for (long k = k_lo; k <= nn; ++k) {
    BigInt term = binom(nn - 1, k - 1);
    for (long r = 1; r <= r_hi; ++r) {
      const BigInt t = binom(k, r) * binom(nn - 3 * r - 1, k - 1);
      // -(-1)^(r+1) t
      if (r % 2 == 1) {
        term -= t;
      } else {
        term += t;
      }
    }
    sum += term;
  }
  return 2 * sum;
}

BigInt f_recursive(unsigned n) {
  if (n < 1) throw InvalidInput("f is defined for n >= 1");
  BigInt a = 2, b = 4, c = 8;
  if (n == 1) return a;
  if (n == 2) return b;
  for (unsigned i = 4; i <= n; ++i) {
    BigInt next = a + b + c;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

std::optional<DecayRecord> decay_record(const DigitString& s, int cap) {
  if (cap < 0) throw InvalidInput("cap must be nonnegative");
  DigitString cur = s;
  for (int n = 0; n <= cap; ++n) {
    Decomposition dec = decompose(cur, SplitMode::full);
    if (dec.fully_common()) return DecayRecord{s, n, dec.particles()};
    if (n < cap) cur = look_and_say_step(cur);
  }
  return std::nullopt;
}

std::optional<int> iterations_to_common(const DigitString& s, int cap) {
  if (auto r = decay_record(s, cap)) return r->iterations;
  return std::nullopt;
}

std::uint64_t DecayTable::cell(std::size_t length, std::size_t iterations) const {
  return row(length).at(iterations);
}

void DecayTable::increment(std::size_t length, std::size_t iterations) {
  if (length < 1 || length > kRows || iterations >= kColumns) {
    throw std::out_of_range("DecayTable cell out of range");
  }
  ++cells_[length - 1][iterations];
}

const DecayTable::Row& DecayTable::row(std::size_t length) const {
  if (length < 1 || length > kRows) throw std::out_of_range("DecayTable row out of range");
  return cells_[length - 1];
}

std::uint64_t DecayTable::row_total(std::size_t length) const {
  const Row& r = row(length);
  std::uint64_t t = 0;
  for (auto v : r) t += v;
  return t;
}

std::uint64_t DecayTable::total() const {
  std::uint64_t t = 0;
  for (std::size_t len = 1; len <= kRows; ++len) t += row_total(len);
  return t;
}

VerificationResult verify_cosmological(const VerifyOptions& options) {
  if (options.cap < 0 || options.cap > kCosmologicalCap) {
    throw InvalidInput("cap must be between 0 and " + std::to_string(kCosmologicalCap));
  }
  VerificationResult result;
  for (std::size_t len = 1; len <= kEssentialMaxLength; ++len) {
    for (auto& s : enumerate_essential_ancient(len)) result.records.push_back({std::move(s), {}});
  }
  const std::size_t total = result.records.size();

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  constexpr std::size_t kChunk = 256;
  auto worker = [&] {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= total) break;
      const std::size_t end = std::min(total, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        result.records[i].iterations = iterations_to_common(result.records[i].input, options.cap);
      }
      const std::size_t now = done.fetch_add(end - begin) + (end - begin);
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(now, total);
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  result.strings_checked = total;
  for (const auto& rec : result.records) {
    if (!rec.iterations) {
      result.counterexamples.push_back(rec.input);
      continue;
    }
    result.table.increment(rec.input.size(), static_cast<std::size_t>(*rec.iterations));
    result.max_iterations = std::max(result.max_iterations, *rec.iterations);
  }
  result.verified = result.counterexamples.empty();
  return result;
}

KValueReport k_value(const DigitString& seed, int max_iter, std::size_t window,
                     std::size_t warmup) {
  if (seed.empty()) throw InvalidInput("k value needs a non-empty seed");
  if (seed.base() != 3) throw InvalidInput("k value is defined for base-3 strings");
  if (max_iter < 0) throw InvalidInput("max_iter must be nonnegative");

  KValueReport report;
  report.seed = seed;
  DigitString cur = seed;
  for (int n = 0; n <= max_iter; ++n) {
    const SplitMode mode = is_run_bounded(cur) ? SplitMode::full : SplitMode::conservative;
    const Decomposition dec = decompose(cur, mode);
    if (dec.fully_common()) {
      report.converged = true;
      report.iterations_to_common = n;
      report.particles = dec.particles();
      break;
    }
    if (n < max_iter) cur = look_and_say_step(cur);
  }
  if (!report.converged) return report;

  const LimitSets sets = limit_sets(report.particles, warmup, window);
  report.limsup = sets.limsup;
  report.liminf = sets.liminf;
  return report;
}

}  // namespace looksay
