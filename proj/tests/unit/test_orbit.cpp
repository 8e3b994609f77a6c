#include <doctest.h>

#include <algorithm>
#include <array>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/orbit.hpp"
#include "betaorbit/palindromes.hpp"

using namespace betaorbit;

namespace {

const char* kPhi = "quad:(1+1*sqrt(5))/2";
const char* kSqrt7 = "quad:(0+1*sqrt(7))";

OrbitResult located(const char* beta) {
  const FreqResult f = freq_of_beta(BetaNumber::parse(beta));
  REQUIRE(f.orbit.has_value());
  return *f.orbit;
}

std::string cert_text(const OrbitResult& r) {
  std::string out;
  for (const auto& e : r.certificate) out += e.left + " " + e.relation + " " + e.right + "\n";
  return out;
}

bool fits(const EpWord& w, const Rational& beta, const Rational& t) {
  auto trace = oracle::simulate_orbit(RealValue(oracle::naive_eval(w, beta)),
                                      BetaNumber(RealValue(beta)), 10000);
  return trace.cycle_closed && oracle::orbit_within(trace, RealValue(t), RealValue(Rational(t + 1 / beta)));
}

}  // namespace

TEST_CASE("frequency examples") {
  OrbitResult r = located(kPhi);
  CHECK(r.frequency == make_rational(1, 2));
  CHECK(r.case_tag == CaseTag::Mc);

  r = located(kSqrt7);
  CHECK(r.frequency == make_rational(5, 4));
  CHECK(r.case_tag == CaseTag::G1b);
  CHECK(r.a == 1);
  CHECK(r.b == 2);
  CHECK(cert_text(r).find("202") != std::string::npos);

  r = located("rat:3/2");
  CHECK(r.frequency == make_rational(1, 3));
  CHECK(r.case_tag == CaseTag::G3b);
  CHECK(r.generator == EpWord::parse("|100"));

  r = located("pi");
  CHECK(r.frequency == 2);
  CHECK(r.case_tag == CaseTag::Ma);
  CHECK(r.generator == EpWord::parse("|2"));

  CHECK(freq_of_beta(BetaNumber::parse("poly:[-1,-1,0,1]@(1.3,1.4)")).frequency == make_rational(1, 5));
  CHECK(freq_of_beta(BetaNumber::parse("int:2")).frequency == 1);
  CHECK_FALSE(freq_of_beta(BetaNumber::parse("int:2")).orbit.has_value());
  CHECK(freq_of_beta(BetaNumber::parse("rat:7/4")).frequency == make_rational(1, 2));
  CHECK(freq_of_beta(BetaNumber::parse("rat:7/4")).orbit->case_tag == CaseTag::G2c);

  const BetaNumber phi = BetaNumber::parse(kPhi);
  const OrbitResult direct = locate_orbit(RealValue(1L) - RealValue(1L) / phi.value(), phi);
  CHECK(direct.generator == located(kPhi).generator);
  CHECK(freq_of_beta(BetaNumber::parse("rat:5/2")).orbit->case_tag == CaseTag::Ma);
}

TEST_CASE("meagre cases at the ends") {
  OrbitResult r = dispatch_orbit(0, DigitStream::from_word(EpWord::parse("|0")));
  CHECK(r.case_tag == CaseTag::Ma);
  CHECK(r.frequency == 0);
  r = dispatch_orbit(1, DigitStream::from_word(EpWord::parse("3|0")));
  CHECK(r.case_tag == CaseTag::Mb);
  CHECK(r.generator == EpWord::parse("|2"));
  CHECK(r.frequency == 2);
  r = dispatch_orbit(0, DigitStream::from_word(EpWord::parse("|01")));
  CHECK(r.case_tag == CaseTag::Mc);
  CHECK(r.frequency == make_rational(1, 2));
}

TEST_CASE("crafted generic cases") {
  struct Case {
    const char* s;
    CaseTag tag;
    const char* freq;
  };
  const Case cases[] = {
      {"0100000|1", CaseTag::G3b, "1/3"},
      {"01002|001", CaseTag::G3dAddendum, "2/5"},
  };
  for (const auto& c : cases) {
    CAPTURE(std::string(c.s));
    OrbitResult r = dispatch_orbit(0, DigitStream::from_word(EpWord::parse(c.s)));
    CHECK(r.case_tag == c.tag);
    CHECK(to_string(r.frequency) == c.freq);
    CHECK(frequency(r.generator) == r.frequency);
  }
}

TEST_CASE("middle case instance") {
  const Rational beta = make_rational(5, 2);
  const EpWord tw = EpWord::parse("001002|001");
  const Rational t = oracle::naive_eval(tw, beta);
  const OrbitResult r = locate_orbit(RealValue(t), BetaNumber(RealValue(beta)));
  REQUIRE(r.case_tag == CaseTag::G3dAddendum);
  CHECK(to_string(r.case_tag) == "G.3d-addendum");
  const FiniteWord u = FiniteWord::parse("010");
  CHECK(r.generator == EpWord::periodic(FiniteWord{1} + u + FiniteWord{0}));
  CHECK(r.frequency == make_rational(2, 5));

  const EpWord as = tw;
  const EpWord bs = tw.shifted(1).prepended(1);
  const EpWord aub = EpWord::periodic(FiniteWord{0} + u + FiniteWord{1});
  CHECK(lex_compare(as, aub) == Ordering::Less);
  CHECK(lex_compare(aub, r.generator) == Ordering::Less);
  CHECK(lex_compare(r.generator, bs) == Ordering::Less);
  CHECK(fits(r.generator, beta, t));

  // The other generic generators do not fit, so a dispatch that skipped this
  // case could not land on a correct answer.
  const CentralDecomp d{u, FiniteWord{}, FiniteWord{0}, 0, 1};
  CHECK_FALSE(fits(EpWord::periodic(FiniteWord{1} + d.q + FiniteWord{0}), beta, t));
  CHECK_FALSE(fits(EpWord::periodic(FiniteWord{1} + d.p + FiniteWord{0}), beta, t));
  CHECK_FALSE(fits(EpWord::constant(0), beta, t));
}

TEST_CASE("certificates are strict") {
  for (const char* b : {kPhi, kSqrt7, "rat:3/2", "rat:7/4", "rat:5/3", "rat:9/5"}) {
    CAPTURE(std::string(b));
    const OrbitResult r = located(b);
    REQUIRE_FALSE(r.certificate.empty());
    const bool generic = r.case_tag != CaseTag::Ma && r.case_tag != CaseTag::Mb && r.case_tag != CaseTag::Mc;
    for (const auto& e : r.certificate) {
      CHECK(e.relation != "?");
      if (e.left.rfind("a·s", 0) == 0) CHECK(e.relation == "<");
      if (generic && e.right.rfind("b·s", 0) == 0) CHECK(e.relation == "<");
    }
  }
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(locate_orbit(RealValue(make_rational(1, 2)), BetaNumber::parse("rat:3/2")),
                  DomainError);
  CHECK_THROWS_AS(locate_orbit(RealValue(-1L), BetaNumber::parse("rat:3/2")), DomainError);
}

TEST_CASE("undetermined reports an enclosure") {
  try {
    freq_of_beta(BetaNumber::parse(oracle::kSturmianLikeBeta), 64);
    FAIL("expected Undetermined");
  } catch (const Undetermined& u) {
    CHECK(u.lo() <= make_rational(89, 144));
    CHECK(make_rational(89, 144) <= u.hi());
    CHECK(u.hi() - u.lo() <= make_rational(1, 8));
  }
}

TEST_CASE("delta") {
  CHECK(compare(delta(make_rational(1, 2)), BetaNumber::parse(kPhi).value()) == Ordering::Equal);
  CHECK(delta(make_rational(1, 5)).to_decimal(9) == "1.324717957");
  CHECK(delta(Rational(0)).to_string() == "1");
  CHECK(delta(Rational(2)).to_string() == "3");
  CHECK(delta(make_rational(2, 3)).to_decimal(4) == "1.8393");
  CHECK_THROWS_AS(delta(Rational(-1)), DomainError);
}

TEST_CASE("staircase") {
  std::vector<Rational> sample;
  std::vector<std::array<long, 4>> bounds{{0, 1, 2, 1}};
  for (std::size_t i = 0; sample.size() < 50; ++i) {
    const auto [a, b, c, d] = bounds[i];
    sample.push_back(make_rational(a + c, b + d));
    bounds.push_back({a, b, a + c, b + d});
    bounds.push_back({a + c, b + d, c, d});
  }
  std::sort(sample.begin(), sample.end());
  RealValue prev(1L);
  for (const auto& alpha : sample) {
    CAPTURE(to_string(alpha));
    const RealValue beta = delta(alpha);
    CHECK(compare(prev, beta) != Ordering::Greater);
    CHECK(freq_of_beta(BetaNumber(beta)).frequency == alpha);
    prev = beta;
  }
}

TEST_CASE("xi") {
  CHECK(xi(make_rational(1, 2), BetaNumber::parse("int:2")).to_string() == "2/3");
  CHECK(compare(xi(make_rational(1, 2), BetaNumber::parse(kPhi)), RealValue(1L)) == Ordering::Equal);
  CHECK_THROWS_AS(xi(make_rational(1, 2), BetaNumber::parse("rat:3/2")), DomainError);
  CHECK_THROWS_AS(xi(Rational(0), BetaNumber::parse("int:2")), DomainError);
}

TEST_CASE("xi is defined exactly up to Freq") {
  struct Case {
    const char* beta;
    std::vector<Rational> inside;
  };
  const Case cases[] = {
      {kPhi, {make_rational(1, 2), make_rational(2, 5), make_rational(1, 3), make_rational(1, 7)}},
      {"rat:3/2", {make_rational(1, 3), make_rational(1, 4), make_rational(2, 7), make_rational(1, 10)}},
      {kSqrt7, {make_rational(5, 4), Rational(1), make_rational(6, 5), make_rational(1, 2)}},
  };
  for (const auto& c : cases) {
    CAPTURE(std::string(c.beta));
    const BetaNumber beta = BetaNumber::parse(c.beta);
    const Rational f = freq_of_beta(beta).frequency;
    for (const auto& alpha : c.inside) {
      CAPTURE(to_string(alpha));
      REQUIRE(alpha <= f);
      CHECK_NOTHROW(xi(alpha, beta));
    }
    CHECK_THROWS_AS(xi(f + make_rational(1, 100), beta), DomainError);
  }
}

TEST_CASE("diameters") {
  const BetaNumber two = BetaNumber::parse("int:2");
  DiamReport r = diam_classify(RealValue(make_rational(1, 3)), two);
  REQUIRE(std::holds_alternative<diam::Mechanical>(r));
  CHECK(std::get<diam::Mechanical>(r).slope == make_rational(1, 2));
  CHECK(std::get<diam::Mechanical>(r).value.to_string() == "1/3");
  CHECK(diam_formula(two, 2).to_string() == "1/3");

  r = diam_classify(RealValue(make_rational(5, 6)), two);
  REQUIRE(std::holds_alternative<diam::Skew>(r));
  CHECK(std::get<diam::Skew>(r).slope == make_rational(1, 2));
  CHECK(std::get<diam::Skew>(r).stable_after == 1);
  CHECK(std::get<diam::Skew>(r).value.to_string() == "1/3");

  r = diam_classify(RealValue(make_rational(1, 5)), two);
  CHECK(std::holds_alternative<diam::NotSmall>(r));
  CHECK(describe(r).find("NotSmall") != std::string::npos);
  CHECK_THROWS_AS(diam_classify(RealValue(2L), two), DomainError);
}

TEST_CASE("closed forms for integer bases") {
  CHECK(rational_xi_reconstruct(EpWord::parse("|01"), 2) == make_rational(1, 3));
  CHECK(rational_xi_reconstruct(EpWord::parse("|010"), 3) == make_rational(3, 26));
  CHECK(rational_xi_reconstruct(EpWord::parse("1|10"), 2) == make_rational(5, 6));
  CHECK(rational_xi_reconstruct(EpWord::parse("1|10"), 2) ==
        oracle::naive_eval(EpWord::parse("1|10"), Rational(2)));
  CHECK(rational_xi_reconstruct(EpWord::parse("12|0112"), 3) ==
        oracle::naive_eval(EpWord::parse("12|0112"), Rational(3)));
}

TEST_CASE("sturmian orbit diameter at the horizon") {
  const BetaNumber two = BetaNumber::parse("int:2");
  const RealValue alpha(Quadratic::parse("(-1+1*sqrt(5))/2"));
  const ValidatedReal xi_val(
      [alpha, two](long bits) {
        return xi_enclosure(alpha, two, static_cast<std::size_t>(bits) + 8);
      },
      "xi");
  const auto trace = oracle::simulate_orbit(RealValue(xi_val), two, 200);
  REQUIRE_FALSE(trace.exact);
  REQUIRE(trace.enclosures.size() == 201);
  const Interval d = trace.diameter_enclosure();
  const Rational half = make_rational(1, 2);
  const Rational tol = make_rational(1, 1000000000);
  CHECK(d.lo() >= half - tol);
  CHECK(d.hi() <= half + tol);
}
