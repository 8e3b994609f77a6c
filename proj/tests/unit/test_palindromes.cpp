#include <doctest.h>

#include <numeric>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/palindromes.hpp"

using namespace betaorbit;

namespace {

FiniteWord fw(const char* s) { return FiniteWord::parse(s); }

bool has_period(const FiniteWord& w, std::size_t p) {
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

FiniteWord power_prefix(const FiniteWord& base, std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(base[i % base.size()]);
  return FiniteWord(out);
}

}  // namespace

TEST_CASE("palindromic closure examples") {
  CHECK(palindromic_closure(fw("01101")) == fw("0110110"));
  CHECK(palindromic_closure(FiniteWord{}) == FiniteWord{});
  CHECK(palindromic_closure(fw("001")) == fw("00100"));
  CHECK(palindromic_closure(fw("0")) == fw("0"));
}

TEST_CASE("closure matches brute force") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<Letter> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1;
      const FiniteWord c = palindromic_closure(FiniteWord(w));
      REQUIRE(c.letters() == oracle::naive_closure(w));
      REQUIRE(palindromic_closure(c) == c);
    }
  }
}

TEST_CASE("pal examples") {
  CHECK(pal(fw("0")) == fw("0"));
  CHECK(pal(fw("01")) == fw("010"));
  CHECK(pal(fw("010")) == fw("010010"));
  CHECK(pal(FiniteWord{}) == FiniteWord{});
}

TEST_CASE("centrality") {
  CHECK(is_central(fw("010")));
  CHECK_FALSE(is_central(fw("0110")));
  CHECK(is_central(fw("00000")));
  CHECK(is_central(FiniteWord{}));
  CHECK_THROWS_AS(is_central(fw("012")), NonBinaryWord);
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto central = oracle::naive_central_words(n, 1, 2);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<Letter> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = 1 + ((mask >> i) & 1);
      REQUIRE(is_central(FiniteWord(w)) == (central.count(w) > 0));
    }
  }
}

TEST_CASE("central decomposition") {
  CentralDecomp d = central_decompose(fw("010"));
  CHECK(d.p.empty());
  CHECK(d.q == fw("0"));
  d = central_decompose(fw("00100"));
  CHECK(d.p == fw("0"));
  CHECK(d.q == fw("00"));
  d = central_decompose(fw("121"));
  CHECK(d.a == 1);
  CHECK(d.b == 2);
  CHECK(d.q == fw("1"));
  CHECK_THROWS_AS(central_decompose(fw("000")), UnaryPower);
  CHECK_THROWS_AS(central_decompose(fw("0110")), NotCentral);
}

TEST_CASE("directive words") {
  CHECK(directive_word(fw("010")) == fw("01"));
  CHECK(directive_word(fw("0000")) == fw("0000"));
  CHECK(directive_word(fw("010010")) == fw("010"));
  CHECK_THROWS_AS(directive_word(fw("0110")), NotCentral);
}

TEST_CASE("pal round trip") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<Letter> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
      const FiniteWord w = pal(FiniteWord(v));
      REQUIRE(w.letters() == oracle::naive_pal(v));
      REQUIRE(is_central(w));
      REQUIRE(directive_word(w) == FiniteWord(v));
    }
  }
}

TEST_CASE("central word structure") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const auto& letters : oracle::naive_central_words(n)) {
      const FiniteWord w(letters);
      if (w.alphabet().size() < 2) continue;
      const CentralDecomp d = central_decompose(w);
      REQUIRE(d.p.is_palindrome());
      REQUIRE(d.q.is_palindrome());
      REQUIRE(d.p + FiniteWord{0, 1} + d.q == w);
      REQUIRE(d.q + FiniteWord{1, 0} + d.p == w);
      const std::size_t pp = d.p.size() + 2, qq = d.q.size() + 2;
      REQUIRE(has_period(w, pp));
      REQUIRE(has_period(w, qq));
      REQUIRE(std::gcd(pp, qq) == 1);
      const FiniteWord wab = w + FiniteWord{0, 1} + d.q;
      const FiniteWord wba = w + FiniteWord{1, 0} + d.p;
      REQUIRE(wab == power_prefix(d.q + FiniteWord{1, 0}, wab.size()));
      REQUIRE(wba == power_prefix(d.p + FiniteWord{0, 1}, wba.size()));
    }
  }
}

TEST_CASE("longest central prefix") {
  auto d1 = bar_of_one(BetaNumber::parse("rat:3/2"));
  CentralPrefix c = longest_central_prefix(d1.shifted(1), 0, 1, 64);
  CHECK(c.u == fw("010"));
  CHECK_FALSE(c.saturated);

  auto d7 = bar_of_one(BetaNumber::parse("quad:(0+1*sqrt(7))"));
  c = longest_central_prefix(d7.shifted(1), 1, 2, 64);
  CHECK(c.u == fw("11"));
  CHECK_FALSE(c.saturated);

  c = longest_central_prefix(DigitStream::from_word(EpWord::parse("|01")), 0, 1, 50);
  CHECK(c.saturated);
  CHECK(c.u.size() <= 50);
  CHECK(is_central(c.u));
}
