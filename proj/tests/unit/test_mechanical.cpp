#include <doctest.h>

#include "betaorbit/mechanical.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/palindromes.hpp"
#include "generators.hpp"

using namespace betaorbit;

namespace {

FiniteWord fw(const char* s) { return FiniteWord::parse(s); }

MechSpec spec(const Rational& slope, const Rational& rho, bool upper) {
  return MechSpec{RealValue(slope), RealValue(rho), upper};
}

}  // namespace

TEST_CASE("mechanical prefixes") {
  CHECK(mechanical_prefix(spec(make_rational(1, 2), 0, false), 6) == fw("010101"));
  CHECK(mechanical_prefix(spec(make_rational(1, 2), 0, true), 6) == fw("101010"));
  CHECK(mechanical_prefix(spec(2, make_rational(1, 3), false), 5) == fw("22222"));
  CHECK(mechanical_word(1, 2) == EpWord::parse("|01"));
  CHECK(mechanical_word(2, 5) == EpWord::parse("|00101"));
  CHECK(mechanical_word(1, 1) == EpWord::parse("|1"));
  CHECK(mechanical_word(7, 3) == EpWord::parse("|223"));
}

TEST_CASE("christoffel words") {
  Christoffel c = christoffel(1, 2);
  CHECK(c.lower == fw("01"));
  CHECK(c.upper == fw("10"));
  CHECK(c.central.empty());
  c = christoffel(2, 5);
  CHECK(c.lower == fw("00101"));
  CHECK(c.upper == fw("10100"));
  CHECK(c.central == fw("010"));
  CHECK(c.central == pal(fw("01")));
  c = christoffel(1, 5);
  CHECK(c.central == fw("000"));
  CHECK(c.upper == fw("10000"));
  for (long q = 1; q <= 12; ++q) {
    for (long p = 1; p < 3 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Christoffel t = christoffel(p, q);
      REQUIRE(t.upper == reversal(t.lower));
      if (p % q == 0) continue;
      REQUIRE(t.lower.size() == static_cast<std::size_t>(q));
      const Letter a = static_cast<Letter>(p / q);
      REQUIRE(t.lower.count(a + 1) == static_cast<std::size_t>(p % q));
      REQUIRE(t.lower == FiniteWord{a} + t.central + FiniteWord{a + 1});
      REQUIRE(is_central(t.central));
    }
  }
}

TEST_CASE("characteristic prefixes") {
  CHECK(characteristic_prefix(RealValue(make_rational(1, 2)), 4) == fw("1010"));
  const FiniteWord s = mechanical_prefix(spec(make_rational(2, 3), 0, false), 9);
  CHECK(characteristic_prefix(RealValue(make_rational(2, 3)), 8) == s.substr(1));
}

TEST_CASE("balance") {
  CHECK(is_balanced(EpWord::parse("|01")).balanced);
  BalanceResult r = is_balanced(EpWord::parse("1|0100000010"));
  CHECK_FALSE(r.balanced);
  REQUIRE(r.witness);
  CHECK(*r.witness == fw("0"));
  CHECK(is_balanced(EpWord::parse("1|10")).balanced);
  r = is_balanced(EpWord::parse("|0011"));
  CHECK_FALSE(r.balanced);
  CHECK(r.witness->empty());
}

TEST_CASE("balance agrees with brute force") {
  for (std::size_t total = 1; total <= 8; ++total) {
    for (unsigned long mask = 0; mask < (1UL << total); ++mask) {
      std::vector<Letter> w(total);
      for (std::size_t i = 0; i < total; ++i) w[i] = (mask >> i) & 1;
      for (std::size_t m = 0; m < total; m += 3) {
        EpWord e(FiniteWord({w.begin(), w.begin() + static_cast<long>(m)}),
                 FiniteWord({w.begin() + static_cast<long>(m), w.end()}));
        BalanceResult b = is_balanced(e);
        REQUIRE(b.balanced == oracle::naive_balanced(e, 40));
        if (!b.balanced) {
          const auto& u = *b.witness;
          REQUIRE(u.is_palindrome());
          const std::size_t n = u.size() + 2;
          const auto fs = oracle::naive_factors(e, n);
          const Letter lo = e.preperiod().empty() ? e.period().min_letter()
                                                  : std::min(e.preperiod().min_letter(), e.period().min_letter());
          REQUIRE(fs.count((FiniteWord{lo} + u + FiniteWord{lo}).letters()) == 1);
          REQUIRE(fs.count((FiniteWord{lo + 1} + u + FiniteWord{lo + 1}).letters()) == 1);
        }
      }
    }
  }
}

TEST_CASE("classification") {
  auto c = classify_balanced(EpWord::parse("|01"));
  REQUIRE(std::holds_alternative<verdict::Mechanical>(c));
  CHECK(std::get<verdict::Mechanical>(c).slope == make_rational(1, 2));
  c = classify_balanced(EpWord::parse("1|10"));
  REQUIRE(std::holds_alternative<verdict::Skew>(c));
  CHECK(std::get<verdict::Skew>(c).slope == make_rational(1, 2));
  CHECK(std::get<verdict::Skew>(c).preperiod_len == 1);
  c = classify_balanced(EpWord::parse("|0011"));
  REQUIRE(std::holds_alternative<verdict::Unbalanced>(c));
  CHECK(std::get<verdict::Unbalanced>(c).witness.empty());
  c = classify_balanced(EpWord::parse("|02"));
  CHECK(std::holds_alternative<verdict::NotBinary>(c));
  CHECK(describe(classify_balanced(EpWord::parse("|12"))).find("Mechanical") != std::string::npos);
}

TEST_CASE("skew words") {
  CHECK(skew_word("", 0, 1, 0, 5) == fw("01111"));
  CHECK(skew_epword("", 1, 1, 0) == EpWord::parse("10|1"));
  auto c = classify_balanced(skew_epword("", 1, 1, 0).shifted(1));
  CHECK(std::holds_alternative<verdict::Skew>(c));
  const std::string scripts[] = {"", "a", "b", "ab", "ba", "aab", "bba", "abab", "baab", "abba"};
  for (const auto& script : scripts) {
    for (std::size_t l = 0; l <= 3; ++l) {
      for (auto [x, y] : {std::pair<Letter, Letter>{0, 1}, {1, 0}}) {
        const EpWord w = skew_epword(script, l, x, y);
        const FiniteWord pre = skew_word(script, l, x, y, 60);
        REQUIRE(pre == w.prefix(60));
        REQUIRE(oracle::naive_balanced(w, 30));
        auto v = classify_balanced(w);
        REQUIRE((std::holds_alternative<verdict::Skew>(v) ||
                 std::holds_alternative<verdict::Mechanical>(v)));
      }
    }
  }
}

TEST_CASE("rational slope factor sets do not depend on the intercept") {
  gen::Gen g(5);
  for (long q = 1; q <= 8; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational alpha = make_rational(p, q);
      const EpWord base = mechanical_word(p, q);
      const auto ref = factors(base, static_cast<std::size_t>(q));
      for (int i = 0; i < 5; ++i) {
        const Rational rho = g.rational(Rational(0), Rational(1), 40);
        const FiniteWord s = mechanical_prefix(spec(alpha, rho, false), static_cast<std::size_t>(4 * q));
        const EpWord w = EpWord::periodic(s.substr(0, static_cast<std::size_t>(q)));
        REQUIRE(factors(w, static_cast<std::size_t>(q)) == ref);
      }
    }
  }
}
