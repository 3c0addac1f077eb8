#include <doctest.h>

#include <limits>
#include <map>

#include "looksay/particles.hpp"
#include "looksay/splitter.hpp"
#include "looksay/step.hpp"
#include "oracles.hpp"

using namespace looksay;
using P = ParticleId;

namespace {

ParticleMultiset single(ParticleId id) {
  ParticleMultiset ms;
  ms.add(id);
  return ms;
}

}  // namespace

TEST_SUITE("particles") {

TEST_CASE("registry contents") {
  const auto& reg = registry();
  CHECK(reg.size() == 24);
  std::map<ParticleClass, int> per_class;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(index_of(reg[i].id) == i);
    ++per_class[reg[i].kind];
    CHECK(identify(particle_digits(reg[i].id)) == reg[i].id);
    CHECK(lookup(reg[i].symbol) == reg[i].id);
  }
  CHECK(per_class[ParticleClass::fermion] == 8);
  CHECK(per_class[ParticleClass::boson] == 13);
  CHECK(per_class[ParticleClass::neutrino] == 3);

  CHECK(particle(P::C).digits == "11222110");
  CHECK(particle(P::C).kind == ParticleClass::fermion);
  CHECK(particle(P::St).digits == "222112");
  CHECK(particle(P::St).kind == ParticleClass::boson);
  CHECK(particle(P::Ne).digits == "22");
  CHECK(particle(P::Ne).kind == ParticleClass::neutrino);
  CHECK_FALSE(lookup("X").has_value());
}

TEST_CASE("identify") {
  CHECK(identify(DigitString::parse("10")) == P::E);
  CHECK_FALSE(identify(DigitString::parse("1")).has_value());
  CHECK_FALSE(identify(DigitString::parse("")).has_value());
  CHECK_FALSE(identify(DigitString::parse("10", 4)).has_value());
}

TEST_CASE("every particle is irreducible") {
  for (const auto& p : registry()) {
    const auto s = particle_digits(p.id);
    CHECK(is_irreducible(s));
    CHECK(oracle::split_points(std::string(p.digits)).empty());
  }
}

TEST_CASE("decay chart") {
  const auto& chart = decay_chart();
  REQUIRE(chart.size() == 24);
  CHECK(chart[index_of(P::C)].products == std::vector<P>{P::D, P::B});
  CHECK(chart[index_of(P::Wb)].products == std::vector<P>{P::H, P::Zb});
  CHECK(chart[index_of(P::Ne)].products == std::vector<P>{P::Ne});
  CHECK(chart[index_of(P::Zb)].products == std::vector<P>{P::M, P::Ph});
  for (std::size_t i = 0; i < chart.size(); ++i) CHECK(index_of(chart[i].parent) == i);
}

TEST_CASE("chart soundness: derived chart equals the hardcoded one") {
  CHECK(derive_decay_chart() == decay_chart());
}

TEST_CASE("chart against the string oracle") {
  // Each parent's step, computed independently, is the concatenation of
  // its products and cuts cleanly between them.
  for (const auto& rule : decay_chart()) {
    const std::string stepped = oracle::step(std::string(particle(rule.parent).digits), 3);
    std::string joined;
    std::vector<std::size_t> cuts;
    for (P p : rule.products) {
      if (!joined.empty()) cuts.push_back(joined.size());
      joined += particle(p).digits;
    }
    CHECK(joined == stepped);
    CHECK(oracle::split_points(stepped) == cuts);
  }
}

TEST_CASE("derived examples") {
  const auto chart = derive_decay_chart();
  CHECK(chart[index_of(P::Sm)].products == std::vector<P>{P::E, P::Su});
  CHECK(chart[index_of(P::T)].products == std::vector<P>{P::E, P::B});
  CHECK(chart[index_of(P::M)].products == std::vector<P>{P::E, P::U});
}

TEST_CASE("fermion closure") {
  for (const auto& rule : decay_chart()) {
    if (particle(rule.parent).kind != ParticleClass::fermion) continue;
    for (P p : rule.products) CHECK(particle(p).kind == ParticleClass::fermion);
  }
}

TEST_CASE("evolve examples") {
  CHECK(evolve(single(P::E), 1) == single(P::M));
  const ParticleMultiset neutrinos{{P::Ne, 1}, {P::Nm, 2}};
  for (std::size_t n : {0, 1, 7, 50}) CHECK(evolve(neutrinos, n) == neutrinos);
  CHECK(evolve(single(P::C), 2) == ParticleMultiset{{P::S, 1}, {P::T, 1}});
  CHECK(evolve(single(P::H), 0) == single(P::H));
}

TEST_CASE("neutrino conservation") {
  ParticleMultiset ms;
  for (const auto& p : registry()) ms.add(p.id, index_of(p.id) + 1);
  for (std::size_t n = 0; n <= 60; n += 3) {
    const auto e = evolve(ms, n);
    for (P nu : {P::Ne, P::Nm, P::Nt}) CHECK(e.count(nu) == ms.count(nu));
  }
}

TEST_CASE("boson count grows at most linearly") {
  // The Ph-Gl-Wb-Zb cycle sheds an H every four steps, and each H ends in
  // the Sb-St cycle, so bosons pile up at rate 1/4 and no faster.
  for (const auto& p : registry()) {
    if (p.kind != ParticleClass::boson) continue;
    ParticleMultiset ms = single(p.id);
    for (std::size_t n = 0; n <= 200; ++n) {
      REQUIRE(ms.total_of_class(ParticleClass::boson) <= BigInt(n / 4 + 2));
      ms = evolve(ms, 1);
    }
  }
  CHECK(evolve(single(P::Ph), 200).total_of_class(ParticleClass::boson) >= 40);
}

TEST_CASE("fermion saturation after 14 steps") {
  for (std::size_t i = 0; i < kFermionCount; ++i) {
    const auto e = evolve(single(static_cast<P>(i)), 14);
    for (std::size_t j = 0; j < kFermionCount; ++j) CHECK(e.count(static_cast<P>(j)) > 0);
  }
  // 13 is not enough from every start.
  bool some_missing = false;
  for (std::size_t i = 0; i < kFermionCount; ++i) {
    const auto e = evolve(single(static_cast<P>(i)), 13);
    for (std::size_t j = 0; j < kFermionCount; ++j) some_missing |= e.count(static_cast<P>(j)) == 0;
  }
  CHECK(some_missing);
}

TEST_CASE("length conservation") {
  for (const auto& p : registry()) {
    const auto next = evolve(single(p.id), 1);
    CHECK(next.digit_length() == BigInt(look_and_say_step(particle_digits(p.id)).size()));
  }
  // And along a long trajectory, against direct iteration of the digits.
  DigitString s = particle_digits(P::U);
  ParticleMultiset ms = single(P::U);
  for (int n = 0; n < 25; ++n) {
    s = look_and_say_step(s);
    ms = evolve(ms, 1);
    CHECK(ms.digit_length() == BigInt(s.size()));
    CHECK(decompose(s).particles() == ms);
  }
}

TEST_CASE("particle sets") {
  ParticleSet a{P::E, P::M};
  CHECK(a.size() == 2);
  CHECK(a.contains(P::E));
  CHECK_FALSE(a.contains(P::U));
  CHECK(a.is_subset_of(ParticleSet::of_class(ParticleClass::fermion)));
  CHECK(ParticleSet::all().size() == 24);
  CHECK(ParticleSet::of_class(ParticleClass::boson).size() == 13);
  CHECK((a & ParticleSet{P::M, P::U}) == ParticleSet{P::M});
  CHECK((a | ParticleSet{P::U}).size() == 3);
  CHECK(a.members() == std::vector<P>{P::E, P::M});
}

TEST_CASE("limit sets") {
  const auto fermions = ParticleSet::of_class(ParticleClass::fermion);
  const auto e = limit_sets(single(P::E));
  CHECK(e.limsup == fermions);
  CHECK(e.liminf == fermions);

  const auto ne = limit_sets(single(P::Ne), 5, 3);
  CHECK(ne.limsup == ParticleSet{P::Ne});
  CHECK(ne.liminf == ParticleSet{P::Ne});

  const auto sb = limit_sets(single(P::Sb), 8, 8);
  CHECK(sb.limsup.contains(P::Sb));
  CHECK(sb.limsup.contains(P::St));
  CHECK(fermions.is_subset_of(sb.limsup));
  CHECK(sb.liminf.is_subset_of(sb.limsup));
  CHECK_FALSE(sb.liminf.contains(P::Sb));

  CHECK_THROWS(limit_sets(single(P::E), 1, 0));
}

TEST_CASE("multiset counts exceed 64 bits without loss") {
  const auto e = evolve(single(P::E), 200);
  CHECK(e.total() > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(e.total() == e.total_of_class(ParticleClass::fermion));
  // Cayley-Hamilton: fermion totals follow x^8 = 2x^6 + x^5 - x^4 - 2x^3 + x + 1.
  std::vector<BigInt> t;
  for (std::size_t k = 0; k < 8; ++k) t.push_back(evolve(single(P::E), 150 + k).total());
  const BigInt next = evolve(single(P::E), 158).total();
  CHECK(next == 2 * t[6] + t[5] - t[4] - 2 * t[3] + t[1] + t[0]);
}

}  // TEST_SUITE
