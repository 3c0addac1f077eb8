#include <doctest.h>

#include <cmath>

#include "looksay/errors.hpp"
#include "looksay/growth.hpp"
#include "looksay/spectral.hpp"
#include "looksay/step.hpp"
#include "oracles.hpp"

using namespace looksay;

TEST_SUITE("growth") {

TEST_CASE("lengths match direct iteration") {
  for (int base : {2, 3, 4, 10}) {
    for (const char* seed : {"1", "10", "1121122"}) {
      if (base == 2 && std::string(seed).find('2') != std::string::npos) continue;
      const auto lengths = iterate_lengths(DigitString::parse(seed, base), 25);
      REQUIRE(lengths.size() == 26);
      std::string s = seed;
      for (std::size_t n = 0; n <= 25; ++n) {
        CHECK(lengths[n] == s.size());
        s = oracle::step(s, base);
      }
    }
  }
}

TEST_CASE("token lengths match direct iteration") {
  const auto lengths = iterate_lengths(TokenString::parse("1"), 30);
  TokenString t = TokenString::parse("1");
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(lengths[n] == t.tokens().size());
    t = token_step(t);
  }
  const auto big = iterate_lengths(TokenString::parse("5,5,5,5,5,5,5,5,5,5"), 12);
  CHECK(big[1] == 2);
  CHECK(big[2] == 4);
}

TEST_CASE("growth examples") {
  const auto b3 = empirical_growth(DigitString::parse("1"), 60);
  CHECK(std::abs(b3.estimate - 1.3247) < 0.005);
  CHECK(b3.base == 3);
  CHECK(b3.lengths.size() == 61);
  CHECK(b3.ratios.size() == 60);
  for (double r : b3.ratios) CHECK(r > 0);

  const auto b2 = empirical_growth(DigitString::parse("1", 2), 50);
  CHECK(std::abs(b2.estimate - 1.4655) < 0.005);

  const auto fixed = empirical_growth(DigitString::parse("22"), 20);
  for (double r : fixed.ratios) CHECK(r == 1.0);
  CHECK(fixed.estimate == 1.0);
}

TEST_CASE("base 10 and token mode approach the same constant") {
  const auto b10 = empirical_growth(DigitString::parse("1", 10), 50);
  CHECK(std::abs(b10.estimate - 1.3036) < 0.01);
  const auto tok = empirical_growth(TokenString::parse("1"), 50);
  CHECK(tok.base == 0);
  CHECK(std::abs(tok.estimate - 1.3036) < 0.01);
  CHECK(tok.lengths == b10.lengths);
}

TEST_CASE("growth agrees with the spectrum") {
  const double lambda = dominant_eigenvalue(fermion_matrix().entries);
  const auto g = empirical_growth(DigitString::parse("10"), 60);
  CHECK(std::abs(g.estimate - lambda) < 0.005);
}

TEST_CASE("growth input checks") {
  CHECK_THROWS_AS(empirical_growth(DigitString::parse(""), 20), InvalidInput);
  CHECK_THROWS_AS(empirical_growth(DigitString::parse("1"), 9), InvalidInput);
  CHECK_THROWS_AS(empirical_growth(TokenString::parse(""), 20), InvalidInput);
  CHECK_THROWS_AS(empirical_growth(DigitString::parse("1"), 60, 1000), ResourceError);
}

}  // TEST_SUITE
