#include <doctest.h>

#include <mpfr.h>

#include "betaorbit/errors.hpp"
#include "betaorbit/qpoly.hpp"
#include "betaorbit/real_value.hpp"
#include "generators.hpp"

using namespace betaorbit;

namespace {

const Quadratic kPhi = Quadratic::parse("(1+1*sqrt(5))/2");

int mpfr_sign_of(const Quadratic& q) {
  mpfr_t r, s, t;
  mpfr_inits2(200, r, s, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(r, q.r().get_mpq_t(), MPFR_RNDN);
  mpfr_set_z(t, q.d().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  mpfr_set_q(s, q.s().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(s, s, t, MPFR_RNDN);
  mpfr_add(r, r, s, MPFR_RNDN);
  const int out = mpfr_sgn(r);
  mpfr_clears(r, s, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST_CASE("integer grid") {
  RealValue phi(kPhi);
  GridPoint g = compare_to_integer_grid(phi);
  CHECK(g.floor == 1);
  CHECK_FALSE(g.exact_hit);
  g = compare_to_integer_grid(RealValue(make_rational(6, 3)));
  CHECK(g.floor == 2);
  CHECK(g.exact_hit);
  g = compare_to_integer_grid(phi * phi - phi);
  CHECK(g.floor == 1);
  CHECK(g.exact_hit);
  g = compare_to_integer_grid(RealValue(ValidatedReal::pi()));
  CHECK(g.floor == 3);
  CHECK_FALSE(g.exact_hit);
}

TEST_CASE("eval_word examples") {
  CHECK(eval_word(EpWord::parse("|01"), BetaNumber::parse("int:2")).to_string() == "1/3");
  RealValue one = eval_word(FiniteWord::parse("11"), BetaNumber::parse("quad:(1+1*sqrt(5))/2"));
  CHECK(compare(one, RealValue(1L)) == Ordering::Equal);
  CHECK(eval_word(FiniteWord{}, BetaNumber::parse("pi")).sign() == 0);
  CHECK(compare(eval_word(EpWord::parse("|10"), BetaNumber::parse("quad:(1+1*sqrt(5))/2")),
                RealValue(1L)) == Ordering::Equal);
}

TEST_CASE("eval_word enclosures hold the exact value") {
  gen::Gen g(101);
  for (int i = 0; i < 100; ++i) {
    const Rational beta = g.rational(Rational(1), Rational(4), 9) + make_rational(1, 97);
    const Letter k = static_cast<Letter>(ceil_of(beta).get_ui());
    EpWord w = g.epword(4, 4, k);
    const RealValue exact = eval_word(w, RealValue(beta));
    REQUIRE(exact.rational() != nullptr);
    RealValue fuzzy = eval_word(w, RealValue(ValidatedReal::exact(beta)));
    CHECK(fuzzy.enclose(200).contains(*exact.rational()));
    CHECK(fuzzy.enclose(60).contains(*exact.rational()));
  }
}

TEST_CASE("quadratic arithmetic") {
  gen::Gen g(7);
  const long ds[] = {2, 3, 5, 7, 13};
  for (int i = 0; i < 100; ++i) {
    const Integer d = ds[g.integer(0, 4)];
    Quadratic x(make_rational(g.integer(-50, 50), g.integer(1, 9)),
                make_rational(g.integer(-50, 50), g.integer(1, 9)), d);
    Quadratic y(make_rational(g.integer(-50, 50), g.integer(1, 9)),
                make_rational(g.integer(-50, 50), g.integer(1, 9)), d);
    Quadratic z(make_rational(g.integer(-9, 9), 1), make_rational(g.integer(-9, 9), 1), d);
    CHECK(x.sign() == mpfr_sign_of(x));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (x.sign() != 0) CHECK((y / x) * x == y);
    auto c = x.canonical();
    CHECK(c.c > 0);
    Integer gcd_all;
    mpz_gcd(gcd_all.get_mpz_t(), c.a.get_mpz_t(), c.b.get_mpz_t());
    mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), c.c.get_mpz_t());
    CHECK(gcd_all == 1);
  }
  CHECK(Quadratic::from_parts(0, 1, 28, 1) == Quadratic(0, 2, 7));
}

TEST_CASE("dominant roots") {
  RealValue phi = isolate_dominant_root({-1, -1, 1}, Rational(1), Rational(2));
  CHECK(phi.kind() == RealValue::Kind::Quadratic);
  CHECK(compare(phi, RealValue(kPhi)) == Ordering::Equal);
  CHECK(phi.to_decimal(10) == "1.6180339887");

  RealValue plastic = isolate_dominant_root({-1, 0, 0, 0, -1, 1}, Rational(1), Rational(2));
  CHECK(plastic.to_decimal(10) == "1.3247179572");
  const poly::QPoly p = poly::from_integers({-1, 0, 0, 0, -1, 1});
  Interval prev = plastic.enclose(20);
  for (long bits : {40L, 80L, 160L}) {
    Interval e = plastic.enclose(bits);
    CHECK(e.width() <= prev.width());
    CHECK(poly::eval(p, e).contains_zero());
    CHECK(e.width() < Rational(1) / Rational(ipow(2, static_cast<unsigned long>(bits - 2))));
    prev = e;
  }

  RealValue three = isolate_dominant_root({-3, 1}, Rational(2), Rational(4));
  CHECK(three.to_string() == "3");
  CHECK_THROWS_AS(isolate_dominant_root({-1, -1, 1}, Rational(2), Rational(3)), NoRoot);
}

TEST_CASE("parsing bases") {
  CHECK(BetaNumber::parse("int:3").as_integer() == Integer(3));
  CHECK(BetaNumber::parse("rat:3/2").alphabet_size() == 2);
  CHECK(BetaNumber::parse("pi").floor() == 3);
  CHECK(BetaNumber::parse("quad:(0+1*sqrt(7))").alphabet_size() == 3);
  CHECK(BetaNumber::parse("poly:[-1,-1,0,1]@(1.3,1.4)").value().to_decimal(6) == "1.324718");
  CHECK(BetaNumber::parse("dec:1.32471795724@60").kind() == RealValue::Kind::Validated);
  CHECK_THROWS(BetaNumber::parse("rat:1/2"));
  CHECK_THROWS(BetaNumber::parse("bogus"));
}

TEST_CASE("validated comparisons escalate or give up") {
  RealValue pi(ValidatedReal::pi());
  CHECK(compare(pi, RealValue(make_rational(355, 113))) == Ordering::Less);
  CHECK(pi.repr_tag().rfind("enclosure", 0) == 0);
  const Rational eps = Rational(1) / Rational(ipow(Integer(10), 10));
  RealValue almost(ValidatedReal([eps](long) { return Interval(3 - eps, 3 + eps); }, "fuzzy"));
  PrecisionPolicy tight{16, 32};
  CHECK_THROWS_AS(compare(almost, RealValue(3L), tight), PrecisionExhausted);
}

TEST_CASE("intervals") {
  Interval a(Rational(1), Rational(2));
  Interval b(Rational(-1), Rational(3));
  CHECK((a * b).contains(Rational(-2)));
  CHECK((a * b).contains(Rational(6)));
  CHECK_THROWS_AS(a / b, InsufficientPrecision);
  CHECK_FALSE(Interval(make_rational(1, 2), make_rational(3, 2)).grid().has_value());
  CHECK(Interval(make_rational(5, 4), make_rational(3, 2)).grid()->floor == 1);
  Interval r = Interval(make_rational(1, 3)).rounded(10);
  CHECK(r.contains(make_rational(1, 3)));
  CHECK(r.width() <= make_rational(1, 1024));
}
