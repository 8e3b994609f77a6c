#include <doctest.h>

#include <set>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/orbit.hpp"

using namespace betaorbit;
using namespace betaorbit::oracle;

TEST_CASE("orbit simulation examples") {
  auto tr = simulate_orbit(RealValue(make_rational(1, 3)), BetaNumber::parse("int:2"), 10);
  CHECK(tr.cycle_closed);
  CHECK(tr.points.size() == 2);
  CHECK(tr.diameter().to_string() == "1/3");

  const BetaNumber phi = BetaNumber::parse("quad:(1+1*sqrt(5))/2");
  tr = simulate_orbit(RealValue(1L), phi, 10);
  CHECK(tr.points.size() == 2);
  CHECK(compare(tr.points[1], phi.value() - RealValue(1L)) == Ordering::Equal);
  CHECK(compare(tr.diameter(), RealValue(2L) - phi.value()) == Ordering::Equal);

  tr = simulate_orbit(RealValue(0L), BetaNumber::parse("pi"), 5);
  CHECK(tr.diameter_enclosure().hi() == 0);
}

TEST_CASE("admissible enumeration") {
  auto words = enumerate_admissible_epwords(make_rational(3, 2), 0, 2);
  std::set<std::string> names;
  for (const auto& w : words) names.insert(w.to_string());
  CHECK(names.count("|0"));
  CHECK(names.count("|01") == 0);
  CHECK(names.count("|1") == 0);

  for (const auto& w : enumerate_admissible_epwords(Rational(2), 2, 3)) {
    CHECK(w.period() != FiniteWord{1});
  }
  const auto golden = enumerate_admissible_epwords(
      make_rational(1618, 1000), 3, 4);
  for (const auto& w : golden) {
    const auto f = naive_factors(w, 2);
    CHECK(f.count({1, 1}) == 0);
  }
  CHECK(golden.size() > 5);
}

TEST_CASE("frequency estimates") {
  CHECK(frequency_estimate(DigitStream::from_word(EpWord::parse("|10")), 1000) == make_rational(1, 2));
  const BetaNumber phi = BetaNumber::parse("quad:(1+1*sqrt(5))/2");
  const Rational e = frequency_estimate(bar_of_one(phi), 1001);
  CHECK(abs(e - make_rational(1, 2)) <= make_rational(1, 1001));
  const Rational p = frequency_estimate(
      DigitStream::from_word(freq_of_beta(BetaNumber::parse("pi")).orbit->generator), 2000);
  CHECK(abs(p - 2) < make_rational(1, 20));
}

TEST_CASE("orbits of admissible words follow their shifts") {
  const Rational beta = make_rational(5, 3);
  const BetaNumber b{RealValue(beta)};
  for (const auto& w : enumerate_admissible_epwords(beta, 2, 4)) {
    if (w.period() == FiniteWord{0} && w != EpWord::constant(0)) continue;
    const auto tr = simulate_orbit(RealValue(naive_eval(w, beta)), b, 100);
    REQUIRE(tr.cycle_closed);
    std::set<std::string> seen, expected;
    for (const auto& x : tr.points) seen.insert(x.to_string());
    for (std::size_t k = 0; k < w.preperiod().size() + w.period().size(); ++k) {
      expected.insert(to_string(naive_eval(w.shifted(k), beta)));
    }
    CHECK(seen == expected);
  }
}

TEST_CASE("located generators stay in the top interval") {
  for (const char* spec : {"quad:(1+1*sqrt(5))/2", "rat:3/2", "quad:(0+1*sqrt(7))",
                           "poly:[-1,-1,0,1]@(1.3,1.4)", "pi"}) {
    CAPTURE(std::string(spec));
    const BetaNumber beta = BetaNumber::parse(spec);
    const RealValue t = RealValue(1L) - RealValue(1L) / beta.value();
    const OrbitResult r = *freq_of_beta(beta).orbit;
    const auto tr = simulate_orbit(eval_word(r.generator, beta), beta, 50);
    if (tr.exact) {
      CHECK(orbit_within(tr, t, RealValue(1L)));
    } else {
      const Interval lo = t.enclose(300);
      for (const auto& x : tr.enclosures) {
        CHECK(x.lo() >= lo.lo());
        CHECK(x.hi() <= 1);
      }
    }
  }
}

TEST_CASE("suites are registered") {
  const auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK(names.front() == "freq-table");
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  const auto r = run_suite("digit-prefixes");
  CHECK(r.passed);
}
