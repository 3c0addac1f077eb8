#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "looksay/digit_string.hpp"

namespace looksay {

using BigInt = boost::multiprecision::cpp_int;

enum class ParticleClass : std::uint8_t { fermion, boson, neutrino };

/// The 24 common base-3 strings, in table reading order: fermions, then
/// bosons, then neutrinos. The numeric value doubles as a registry index.
enum class ParticleId : std::uint8_t {
  E, M, U, D, S, C, B, T,
  Ph, Gl, Wb, Zb, H, Se, Sm, Su, Sd, Ss, Sc, Sb, St,
  Ne, Nm, Nt,
};

inline constexpr std::size_t kParticleCount = 24;
inline constexpr std::size_t kFermionCount = 8;

struct Particle {
  ParticleId id;
  std::string_view symbol;
  std::string_view digits;
  ParticleClass kind;
  std::string_view name;
};

/// Row/column order of the fermion transition matrix. Differs from the
/// registry order (E M U D S C B T).
inline constexpr std::array<ParticleId, kFermionCount> kFermionMatrixOrder{
    ParticleId::E, ParticleId::M, ParticleId::D, ParticleId::B,
    ParticleId::U, ParticleId::S, ParticleId::T, ParticleId::C,
};

constexpr std::size_t index_of(ParticleId id) noexcept { return static_cast<std::size_t>(id); }

/// All 24 particles in registry order.
const std::array<Particle, kParticleCount>& registry();

const Particle& particle(ParticleId id);
DigitString particle_digits(ParticleId id);
std::string_view class_name(ParticleClass c);

/// Lookup by symbol ("C", "St", ...).
std::optional<ParticleId> lookup(std::string_view symbol);

/// The particle whose digit string is exactly s, if any. Only base-3
/// strings can match.
std::optional<ParticleId> identify(const DigitString& s);
std::optional<ParticleId> identify(std::span<const Digit> digits);

struct DecayRule {
  ParticleId parent;
  std::vector<ParticleId> products;

  friend bool operator==(const DecayRule&, const DecayRule&) = default;
};

/// The one-step decay of every particle, in registry order.
const std::vector<DecayRule>& decay_chart();

/// Recomputes the chart from scratch: steps each particle once and splits
/// the result. Throws ConsistencyError if a piece is not a particle.
std::vector<DecayRule> derive_decay_chart();

/// Small set of particles backed by a bitset in registry order.
class ParticleSet {
 public:
  ParticleSet() = default;
  ParticleSet(std::initializer_list<ParticleId> ids);

  static ParticleSet all();
  static ParticleSet of_class(ParticleClass c);

  void insert(ParticleId id) { bits_.set(index_of(id)); }
  [[nodiscard]] bool contains(ParticleId id) const { return bits_.test(index_of(id)); }
  [[nodiscard]] std::size_t size() const { return bits_.count(); }
  [[nodiscard]] bool empty() const { return bits_.none(); }
  [[nodiscard]] bool is_subset_of(const ParticleSet& other) const {
    return (bits_ & ~other.bits_).none();
  }
  [[nodiscard]] std::vector<ParticleId> members() const;

  ParticleSet& operator|=(const ParticleSet& o) { bits_ |= o.bits_; return *this; }
  ParticleSet& operator&=(const ParticleSet& o) { bits_ &= o.bits_; return *this; }
  friend ParticleSet operator|(ParticleSet a, const ParticleSet& b) { return a |= b; }
  friend ParticleSet operator&(ParticleSet a, const ParticleSet& b) { return a &= b; }
  friend bool operator==(const ParticleSet&, const ParticleSet&) = default;

 private:
  std::bitset<kParticleCount> bits_;
};

/// Counts of each particle. Arbitrary precision: fermion counts grow like
/// 1.3247^n and leave 64 bits behind around n = 160.
class ParticleMultiset {
 public:
  ParticleMultiset() = default;
  ParticleMultiset(std::initializer_list<std::pair<ParticleId, unsigned>> init);

  [[nodiscard]] const BigInt& count(ParticleId id) const { return counts_[index_of(id)]; }
  void add(ParticleId id, const BigInt& n = 1) { counts_[index_of(id)] += n; }

  [[nodiscard]] BigInt total() const;
  [[nodiscard]] BigInt total_of_class(ParticleClass c) const;
  /// Sum over particles of count * digit length.
  [[nodiscard]] BigInt digit_length() const;
  [[nodiscard]] ParticleSet support() const;

  friend bool operator==(const ParticleMultiset&, const ParticleMultiset&) = default;

 private:
  std::array<BigInt, kParticleCount> counts_{};
};

/// Applies the decay chart n times.
ParticleMultiset evolve(const ParticleMultiset& ms, std::size_t n);

struct LimitSets {
  ParticleSet limsup;  ///< seen at least once in the window
  ParticleSet liminf;  ///< present at every step of the window
};

inline constexpr std::size_t kDefaultWarmup = 32;
inline constexpr std::size_t kDefaultWindow = 32;

/// Evolves `warmup` steps, then records the support over the next `window`
/// steps. The window must outlast every cycle in the chart (longest: 4).
LimitSets limit_sets(const ParticleMultiset& ms, std::size_t warmup = kDefaultWarmup,
                     std::size_t window = kDefaultWindow);

}  // namespace looksay
