#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "looksay/digit_string.hpp"
#include "looksay/particles.hpp"

namespace looksay {

/// Forever-leading-2-free: no iterate of the string ever begins with 2.
///
/// Decided from a short prefix. True for the empty string, anything
/// beginning with 0, and anything beginning with 1 followed by 0, by 11,
/// by a lone 2 (then a non-2 or the end) or by 222. The bare string "1" is
/// not flf (1 -> 11 -> 21).
///
/// Only meaningful for base-3 strings satisfying is_run_bounded; in
/// particular a leading 1-run may not exceed four.
bool is_flf(std::span<const Digit> digits);
inline bool is_flf(const DigitString& s) { return is_flf(s.digits()); }

/// Every internal cut p (0 < p < size) at which s = L.R splits for good:
///   L ends in 0 and R begins with 1 or 2;
///   L ends in 1 and R = 22Y with Y flf (Y may be empty);
///   L ends in 2 and R is flf.
/// Throws ContractError unless s is a base-3, run-bounded string.
std::vector<std::size_t> split_points(const DigitString& s);

/// The cuts that are safe for any base-3 string: a 0 followed by a non-0.
std::vector<std::size_t> split_points_conservative(const DigitString& s);

enum class SplitMode { full, conservative };

struct Decomposition {
  std::vector<DigitString> segments;
  std::vector<std::optional<ParticleId>> identified;

  /// Non-empty and every segment is a common particle.
  [[nodiscard]] bool fully_common() const;

  /// "10.110.2110.211"
  [[nodiscard]] std::string dotted() const;
  /// "E.U.D.Ph", with "?" for unidentified segments.
  [[nodiscard]] std::string symbols() const;
  /// Multiset of the identified segments (unidentified ones are skipped).
  [[nodiscard]] ParticleMultiset particles() const;
};

Decomposition decompose(const DigitString& s, SplitMode mode = SplitMode::full);

/// Cuts s at the given ascending positions and identifies each piece.
Decomposition decompose_at(const DigitString& s, std::span<const std::size_t> cuts);

bool is_irreducible(const DigitString& s);
bool is_common(const DigitString& s);

}  // namespace looksay
