#include "looksay/splitter.hpp"

#include "looksay/errors.hpp"
#include "looksay/step.hpp"

namespace looksay {

bool is_flf(std::span<const Digit> s) {
  if (s.empty() || s[0] == 0) return true;
  if (s[0] != 1 || s.size() == 1) return false;
  switch (s[1]) {
    case 0:
      return true;
    case 1:
      // [111 (a leading run of exactly two 1's becomes 21...)
      return s.size() >= 3 && s[2] == 1;
    default: {
      std::size_t twos = 1;
      while (1 + twos < s.size() && s[1 + twos] == 2) ++twos;
      return twos != 2;
    }
  }
}

std::vector<std::size_t> split_points(const DigitString& s) {
  if (s.base() != 3) throw ContractError("full splitting is defined for base 3 only");
  if (!is_run_bounded(s)) {
    throw ContractError("full splitting requires a run-bounded string, got " + s.str());
  }
  const auto d = s.digits();
  std::vector<std::size_t> cuts;
  for (std::size_t p = 1; p < d.size(); ++p) {
    const auto rest = d.subspan(p);
    bool cut = false;
    switch (d[p - 1]) {
      case 0:
        cut = rest[0] != 0;
        break;
      case 1:
        cut = rest.size() >= 2 && rest[0] == 2 && rest[1] == 2 && is_flf(rest.subspan(2));
        break;
      default:
        cut = is_flf(rest);
        break;
    }
    if (cut) cuts.push_back(p);
  }
  return cuts;
}

std::vector<std::size_t> split_points_conservative(const DigitString& s) {
  const auto d = s.digits();
  std::vector<std::size_t> cuts;
  for (std::size_t p = 1; p < d.size(); ++p) {
    if (d[p - 1] == 0 && d[p] != 0) cuts.push_back(p);
  }
  return cuts;
}

bool Decomposition::fully_common() const {
  if (segments.empty()) return false;
  for (const auto& id : identified) {
    if (!id) return false;
  }
  return true;
}

std::string Decomposition::dotted() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '.';
    out += segments[i].str();
  }
  return out;
}

std::string Decomposition::symbols() const {
  std::string out;
  for (std::size_t i = 0; i < identified.size(); ++i) {
    if (i > 0) out += '.';
    out += identified[i] ? std::string(particle(*identified[i]).symbol) : std::string("?");
  }
  return out;
}

ParticleMultiset Decomposition::particles() const {
  ParticleMultiset ms;
  for (const auto& id : identified) {
    if (id) ms.add(*id);
  }
  return ms;
}

Decomposition decompose_at(const DigitString& s, std::span<const std::size_t> cuts) {
  Decomposition out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    out.segments.push_back(s.substr(start, end - start));
    out.identified.push_back(identify(out.segments.back()));
    start = end;
  };
  for (std::size_t p : cuts) {
    if (p <= start || p >= s.size()) throw InvalidInput("cut positions must be ascending and internal");
    emit(p);
  }
  if (!s.empty()) emit(s.size());
  return out;
}

Decomposition decompose(const DigitString& s, SplitMode mode) {
  const auto cuts = mode == SplitMode::full ? split_points(s) : split_points_conservative(s);
  return decompose_at(s, cuts);
}

bool is_irreducible(const DigitString& s) { return split_points(s).empty(); }

bool is_common(const DigitString& s) { return decompose(s, SplitMode::full).fully_common(); }

}  // namespace looksay
