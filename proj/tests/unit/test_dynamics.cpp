#include <doctest.h>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/oracle.hpp"
#include "generators.hpp"

using namespace betaorbit;

namespace {

const BetaNumber kPhi = BetaNumber::parse("quad:(1+1*sqrt(5))/2");
const BetaNumber kThreeHalves = BetaNumber::parse("rat:3/2");

}  // namespace

TEST_CASE("t_map examples") {
  const RealValue two_thirds(make_rational(2, 3));
  CHECK(t_map(two_thirds, kThreeHalves, ExpansionKind::Bar).to_string() == "1");
  CHECK(t_map(two_thirds, kThreeHalves, ExpansionKind::Greedy).to_string() == "0");
  CHECK(compare(t_map(RealValue(1L), kPhi, ExpansionKind::Bar), kPhi.value() - RealValue(1L)) ==
        Ordering::Equal);
}

TEST_CASE("expansions of one") {
  CHECK(bar_of_one(kPhi).resolve_exact(100) == EpWord::parse("|10"));
  CHECK(bar_of_one(kThreeHalves).prefix(13) == FiniteWord::parse("1010000010010"));
  CHECK(bar_of_one(BetaNumber::parse("pi")).prefix(10) == FiniteWord::parse("3011021110"));
  CHECK(bar_of_one(BetaNumber::parse("quad:(0+1*sqrt(7))")).prefix(10) ==
        FiniteWord::parse("2112020102"));
  CHECK(bar_of_one(BetaNumber::parse("int:2")).resolve_exact(10) == EpWord::parse("|1"));
}

TEST_CASE("bar from greedy") {
  const EpWord greedy_phi = expand_exact(RealValue(1L), kPhi, ExpansionKind::Greedy);
  CHECK(greedy_phi == EpWord::parse("11|0"));
  CHECK(bar_of_one_from_greedy(greedy_phi) == EpWord::parse("|10"));
  const BetaNumber two = BetaNumber::parse("int:2");
  CHECK(bar_of_one_from_greedy(expand_exact(RealValue(1L), two, ExpansionKind::Greedy)) ==
        EpWord::parse("|1"));
  DigitStream half = bar_from_greedy(EpWord::parse("1|0"), bar_of_one(two));
  CHECK(half.prefix(6) == FiniteWord::parse("011111"));
  CHECK(half.prefix(6) == expand(RealValue(make_rational(1, 2)), two, ExpansionKind::Bar).prefix(6));
  DigitStream third = bar_from_greedy(EpWord::parse("|01"), bar_of_one(two));
  CHECK(third.prefix(8) == FiniteWord::parse("01010101"));
  DigitStream g32 = expand(RealValue(1L), kThreeHalves, ExpansionKind::Greedy);
  CHECK(g32.prefix(40) == bar_of_one(kThreeHalves).prefix(40));
}

TEST_CASE("admissibility") {
  const EpWord d1 = EpWord::parse("|10");
  CHECK_FALSE(is_admissible(EpWord::parse("|10"), d1));
  CHECK_FALSE(is_admissible(EpWord::parse("|01"), d1));
  CHECK(is_admissible(EpWord::parse("|001"), d1));
  CHECK(is_admissible(EpWord::parse("1|0"), d1));
  CHECK(is_admissible(EpWord::parse("|0"), d1));
  CHECK_FALSE(is_admissible(EpWord::parse("0|110"), d1));
  CHECK(is_admissible(EpWord::parse("|0"), bar_of_one(BetaNumber::parse("pi")), 50) == true);
}

TEST_CASE("frequencies") {
  CHECK(frequency(EpWord::parse("|10")) == make_rational(1, 2));
  CHECK(frequency(EpWord::parse("|10000")) == make_rational(1, 5));
  CHECK(frequency(EpWord::parse("1|10")) == make_rational(1, 2));
  CHECK(frequency(EpWord::parse("|12")) == make_rational(3, 2));
}

TEST_CASE("bar expansions evaluate back to x") {
  gen::Gen g(17);
  for (const char* b : {"3/2", "5/2", "7/3"}) {
    const Rational beta = parse_rational(b);
    const BetaNumber base{RealValue(beta)};
    for (int i = 0; i < 50; ++i) {
      const Rational x = g.rational(Rational(0), Rational(1), 12);
      try {
        const EpWord w = expand_exact(RealValue(x), base, ExpansionKind::Bar, 4000);
        REQUIRE(eval_word(w, base).to_string() == to_string(x));
        REQUIRE(oracle::naive_eval(w, beta) == x);
      } catch (const CycleCapExceeded&) {
        const std::size_t n = 200;
        DigitStream s = expand(RealValue(x), base, ExpansionKind::Bar);
        const Rational head = oracle::naive_eval(EpWord::embed(s.prefix(n)), beta);
        const Rational tail = Rational(ceil_of(beta) - 1) / (rpow(beta, n) * (beta - 1));
        REQUIRE(head <= x);
        REQUIRE(x <= head + tail);
      }
    }
  }
}

TEST_CASE("left limit transform of the greedy expansion of one") {
  for (const char* b : {"quad:(1+1*sqrt(5))/2", "int:2", "rat:3/2"}) {
    const BetaNumber beta = BetaNumber::parse(b);
    DigitStream greedy = expand(RealValue(1L), beta, ExpansionKind::Greedy);
    auto exact = greedy.resolve_exact(400);
    DigitStream bar = bar_of_one(beta);
    if (exact && exact->period() == FiniteWord{0}) {
      CHECK(bar.resolve_exact(400) == bar_of_one_from_greedy(*exact));
    } else {
      CHECK(bar.prefix(80) == greedy.prefix(80));
    }
  }
}

TEST_CASE("greedy expansions preserve order") {
  gen::Gen g(23);
  for (const char* b : {"3/2", "5/3", "5/2"}) {
    const BetaNumber beta{RealValue(parse_rational(b))};
    for (int i = 0; i < 60; ++i) {
      Rational x = g.rational(Rational(0), Rational(1), 30);
      Rational y = g.rational(Rational(0), Rational(1), 30);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      DigitStream dx = expand(RealValue(x), beta, ExpansionKind::Greedy);
      DigitStream dy = expand(RealValue(y), beta, ExpansionKind::Greedy);
      CHECK(lex_compare(dx, dy, 400) == Ordering::Less);
    }
  }
}

TEST_CASE("greedy shifts are admissible") {
  gen::Gen g(31);
  for (const char* b : {"3/2", "7/4", "quad:(1+1*sqrt(5))/2"}) {
    const BetaNumber beta = BetaNumber::parse(b);
    for (int i = 0; i < 20; ++i) {
      const Rational x = g.rational(Rational(0), make_rational(99, 100), 25);
      DigitStream d = expand(RealValue(x), beta, ExpansionKind::Greedy);
      for (std::size_t n = 0; n <= 30; ++n) {
        auto ok = is_admissible(d.shifted(n), bar_of_one(beta), 200);
        CHECK(ok.value_or(true));
        CHECK(ok.has_value());
      }
    }
  }
}

TEST_CASE("both maps agree off the integer grid") {
  gen::Gen g(37);
  int checked = 0;
  while (checked < 100) {
    const Rational beta = g.rational(Rational(1), Rational(4), 7) + make_rational(1, 101);
    const Rational x = g.rational(Rational(0), Rational(1), 50);
    if (Rational(beta * x).get_den() == 1) continue;
    const BetaNumber base{RealValue(beta)};
    CHECK(t_map(RealValue(x), base, ExpansionKind::Bar).to_string() ==
          t_map(RealValue(x), base, ExpansionKind::Greedy).to_string());
    ++checked;
  }
}

TEST_CASE("bar expansions are never finite") {
  const BetaNumber two = BetaNumber::parse("int:2");
  for (long k = 1; k < 16; ++k) {
    const EpWord w = expand_exact(RealValue(make_rational(k, 16)), two, ExpansionKind::Bar);
    CHECK(w.period() != FiniteWord{0});
  }
}

TEST_CASE("cycle cap") {
  CHECK_THROWS_AS(expand_exact(RealValue(make_rational(1, 7)), kThreeHalves, ExpansionKind::Bar, 50),
                  CycleCapExceeded);
}
