#include "looksay/particles.hpp"

#include <algorithm>
#include <string>

#include "looksay/errors.hpp"
#include "looksay/splitter.hpp"
#include "looksay/step.hpp"

namespace looksay {

namespace {

using enum ParticleId;
constexpr ParticleClass F = ParticleClass::fermion;
constexpr ParticleClass Bo = ParticleClass::boson;
constexpr ParticleClass N = ParticleClass::neutrino;

constexpr std::array<Particle, kParticleCount> kRegistry{{
    {E, "E", "10", F, "electron"},
    {M, "M", "1110", F, "muon"},
    {U, "U", "110", F, "up quark"},
    {D, "D", "2110", F, "down quark"},
    {S, "S", "122110", F, "strange quark"},
    {C, "C", "11222110", F, "charm quark"},
    {B, "B", "22110", F, "bottom quark"},
    {T, "T", "222110", F, "top quark"},
    {Ph, "Ph", "211", Bo, "photon"},
    {Gl, "Gl", "1221", Bo, "gluon"},
    {Wb, "Wb", "112211", Bo, "W boson"},
    {Zb, "Zb", "12221", Bo, "Z boson"},
    {H, "H", "2", Bo, "Higgs boson"},
    {Se, "Se", "12", Bo, "selectron"},
    {Sm, "Sm", "1112", Bo, "smuon"},
    {Su, "Su", "112", Bo, "up squark"},
    {Sd, "Sd", "2112", Bo, "down squark"},
    {Ss, "Ss", "122112", Bo, "strange squark"},
    {Sc, "Sc", "11222112", Bo, "charm squark"},
    {Sb, "Sb", "22112", Bo, "bottom squark"},
    {St, "St", "222112", Bo, "stop squark"},
    {Ne, "Ne", "22", N, "electron neutrino"},
    {Nm, "Nm", "11110", N, "mu neutrino"},
    {Nt, "Nt", "11112", N, "tau neutrino"},
}};

std::vector<DecayRule> make_chart() {
  return {
      {E, {M}},       {M, {E, U}},   {U, {D}},       {D, {S}},       {S, {C}},
      {C, {D, B}},    {B, {T}},      {T, {E, B}},    {Ph, {Gl}},     {Gl, {Wb}},
      {Wb, {H, Zb}},  {Zb, {M, Ph}}, {H, {Se}},      {Se, {Sm}},     {Sm, {E, Su}},
      {Su, {Sd}},     {Sd, {Ss}},    {Ss, {Sc}},     {Sc, {D, Sb}},  {Sb, {St}},
      {St, {E, Sb}},  {Ne, {Ne}},    {Nm, {Nm}},     {Nt, {Nt}},
  };
}

}  // namespace

const std::array<Particle, kParticleCount>& registry() { return kRegistry; }

const Particle& particle(ParticleId id) { return kRegistry[index_of(id)]; }

DigitString particle_digits(ParticleId id) { return DigitString::parse(particle(id).digits, 3); }

std::string_view class_name(ParticleClass c) {
  switch (c) {
    case ParticleClass::fermion: return "fermion";
    case ParticleClass::boson: return "boson";
    case ParticleClass::neutrino: return "neutrino";
  }
  return "?";
}

std::optional<ParticleId> lookup(std::string_view symbol) {
  for (const auto& p : kRegistry) {
    if (p.symbol == symbol) return p.id;
  }
  return std::nullopt;
}

std::optional<ParticleId> identify(std::span<const Digit> digits) {
  if (digits.empty() || digits.size() > 8) return std::nullopt;
  for (const auto& p : kRegistry) {
    if (p.digits.size() != digits.size()) continue;
    if (std::equal(digits.begin(), digits.end(), p.digits.begin(),
                   [](Digit d, char c) { return d == static_cast<Digit>(c - '0'); })) {
      return p.id;
    }
  }
  return std::nullopt;
}

std::optional<ParticleId> identify(const DigitString& s) {
  if (s.base() != 3) return std::nullopt;
  return identify(s.digits());
}

const std::vector<DecayRule>& decay_chart() {
  static const std::vector<DecayRule> chart = make_chart();
  return chart;
}

std::vector<DecayRule> derive_decay_chart() {
  std::vector<DecayRule> out;
  out.reserve(kParticleCount);
  for (const auto& p : kRegistry) {
    const DigitString child = look_and_say_step(particle_digits(p.id));
    const Decomposition dec = decompose(child, SplitMode::full);
    DecayRule rule{p.id, {}};
    for (std::size_t i = 0; i < dec.segments.size(); ++i) {
      if (!dec.identified[i]) {
        throw ConsistencyError("decay of " + std::string(p.symbol) + " yields non-particle " +
                               dec.segments[i].str());
      }
      rule.products.push_back(*dec.identified[i]);
    }
    out.push_back(std::move(rule));
  }
  return out;
}

ParticleSet::ParticleSet(std::initializer_list<ParticleId> ids) {
  for (ParticleId id : ids) insert(id);
}

ParticleSet ParticleSet::all() {
  ParticleSet s;
  s.bits_.set();
  return s;
}

ParticleSet ParticleSet::of_class(ParticleClass c) {
  ParticleSet s;
  for (const auto& p : kRegistry) {
    if (p.kind == c) s.insert(p.id);
  }
  return s;
}

std::vector<ParticleId> ParticleSet::members() const {
  std::vector<ParticleId> out;
  for (std::size_t i = 0; i < kParticleCount; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<ParticleId>(i));
  }
  return out;
}

ParticleMultiset::ParticleMultiset(std::initializer_list<std::pair<ParticleId, unsigned>> init) {
  for (const auto& [id, n] : init) add(id, n);
}

BigInt ParticleMultiset::total() const {
  BigInt t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

BigInt ParticleMultiset::total_of_class(ParticleClass c) const {
  BigInt t = 0;
  for (const auto& p : kRegistry) {
    if (p.kind == c) t += counts_[index_of(p.id)];
  }
  return t;
}

BigInt ParticleMultiset::digit_length() const {
  BigInt t = 0;
  for (const auto& p : kRegistry) t += counts_[index_of(p.id)] * p.digits.size();
  return t;
}

ParticleSet ParticleMultiset::support() const {
  ParticleSet s;
  for (std::size_t i = 0; i < kParticleCount; ++i) {
    if (counts_[i] > 0) s.insert(static_cast<ParticleId>(i));
  }
  return s;
}

ParticleMultiset evolve(const ParticleMultiset& ms, std::size_t n) {
  const auto& chart = decay_chart();
  ParticleMultiset cur = ms;
  for (std::size_t step = 0; step < n; ++step) {
    ParticleMultiset next;
    for (const auto& rule : chart) {
      const BigInt& c = cur.count(rule.parent);
      if (c == 0) continue;
      for (ParticleId child : rule.products) next.add(child, c);
    }
    cur = std::move(next);
  }
  return cur;
}

LimitSets limit_sets(const ParticleMultiset& ms, std::size_t warmup, std::size_t window) {
  if (window < 1) throw InvalidInput("window must be at least 1");
  ParticleMultiset cur = evolve(ms, warmup);
  LimitSets out{ParticleSet{}, ParticleSet::all()};
  for (std::size_t i = 0; i < window; ++i) {
    const ParticleSet support = cur.support();
    out.limsup |= support;
    out.liminf &= support;
    cur = evolve(cur, 1);
  }
  return out;
}

}  // namespace looksay
