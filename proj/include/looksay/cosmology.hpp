#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "looksay/digit_string.hpp"
#include "looksay/particles.hpp"
#include "looksay/splitter.hpp"

namespace looksay {

inline constexpr std::size_t kEssentialMaxLength = 16;
inline constexpr int kCosmologicalCap = 10;

/// At most 16 digits, no run of length 4 or more, and at most one 0, which
/// must be the final digit.
bool is_essential_ancient(const DigitString& s);

/// All essential ancient strings of one length in lexicographic order:
/// {1,2}-prefixes with runs <= 3 built depth-first, the final position
/// also allowing 0. Throws InvalidInput for lengths outside 1..16.
std::vector<DigitString> enumerate_essential_ancient(std::size_t length);

/// Number of {1,2}-strings of length n with no run longer than 3, from the
/// closed-form double binomial sum (n >= 2).
BigInt f_closed(unsigned n);

/// Same count by f(n) = f(n-1) + f(n-2) + f(n-3) from f(1)=2, f(2)=4, f(3)=8.
BigInt f_recursive(unsigned n);

/// Smallest n <= cap such that the full decomposition of step^n(s) is made
/// entirely of common particles, or nullopt when the cap is exceeded.
std::optional<int> iterations_to_common(const DigitString& s, int cap = kCosmologicalCap);

struct DecayRecord {
  DigitString input;
  int iterations = 0;
  ParticleMultiset final_particles;
};

/// iterations_to_common plus the particles reached. nullopt past the cap.
std::optional<DecayRecord> decay_record(const DigitString& s, int cap = kCosmologicalCap);

/// Counts of essential ancient strings by (length 1..16, iterations 0..10).
class DecayTable {
 public:
  static constexpr std::size_t kRows = kEssentialMaxLength;
  static constexpr std::size_t kColumns = kCosmologicalCap + 1;
  using Row = std::array<std::uint64_t, kColumns>;

  [[nodiscard]] std::uint64_t cell(std::size_t length, std::size_t iterations) const;
  void increment(std::size_t length, std::size_t iterations);
  [[nodiscard]] const Row& row(std::size_t length) const;
  [[nodiscard]] std::uint64_t row_total(std::size_t length) const;
  [[nodiscard]] std::uint64_t total() const;

  friend bool operator==(const DecayTable&, const DecayTable&) = default;

 private:
  std::array<Row, kRows> cells_{};
};

struct StringDecay {
  DigitString input;
  std::optional<int> iterations;
};

struct VerificationResult {
  DecayTable table;
  bool verified = false;
  int max_iterations = 0;
  std::uint64_t strings_checked = 0;
  /// Every string in (length, lexicographic) order with its decay time.
  std::vector<StringDecay> records;
  std::vector<DigitString> counterexamples;
};

struct VerifyOptions {
  int cap = kCosmologicalCap;
  unsigned jobs = 1;
  /// Called with (done, total); may be invoked from worker threads, but
  /// never concurrently.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Runs iterations_to_common over every essential ancient string. The
/// result is identical for any number of jobs.
VerificationResult verify_cosmological(const VerifyOptions& options = {});

struct KValueReport {
  DigitString seed;
  bool converged = false;
  int iterations_to_common = -1;
  ParticleMultiset particles;
  ParticleSet limsup;
  ParticleSet liminf;

  /// limsup and liminf agree over the window.
  [[nodiscard]] bool stabilized() const { return converged && limsup == liminf; }
  /// |limsup| when stabilized.
  [[nodiscard]] std::optional<std::size_t> k() const {
    return stabilized() ? std::optional<std::size_t>(limsup.size()) : std::nullopt;
  }
};

inline constexpr int kDefaultKMaxIter = 64;

/// Iterates a base-3 seed until it is fully common (conservative splitting
/// while run bounds fail, full splitting once they hold), then tracks which
/// particles persist.
KValueReport k_value(const DigitString& seed, int max_iter = kDefaultKMaxIter,
                     std::size_t window = kDefaultWindow, std::size_t warmup = kDefaultWarmup);

}  // namespace looksay
