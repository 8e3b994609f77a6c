#include "betaorbit/rational.hpp"

#include <cmath>
#include <regex>

#include "betaorbit/errors.hpp"

namespace betaorbit {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex kDecimal(R"(^\s*([+-]?)(\d*)\.(\d+)\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kFraction)) {
    Integer num(m[1].str());
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rational(num, den);
  }
  if (std::regex_match(s, m, kDecimal)) {
    const std::string int_part = m[2].str().empty() ? "0" : m[2].str();
    const std::string frac = m[3].str();
    Integer num(int_part + frac);
    Integer den = ipow(Integer(10), frac.size());
    if (m[1].str() == "-") num = -num;
    return make_rational(num, den);
  }
  throw ParseError("not a rational number: '" + s + "'");
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  // round half away from zero
  Rational half(1, 2);
  Integer n = sgn(scaled) >= 0 ? floor_of(scaled + half) : -floor_of(-scaled + half);
  const bool negative = n < 0;
  if (negative) n = -n;
  std::string body = n.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + body;
}

std::string power_of_ten_bound(const Rational& r) {
  if (sgn(r) == 0) return "0";
  long k = 0;
  Rational p(1);
  while (p / 10 >= r) {
    p /= 10;
    ++k;
  }
  while (p < r) {
    p *= 10;
    --k;
  }
  return "1e" + std::to_string(-k);
}

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

}  // namespace betaorbit
