#include "betaorbit/quadratic.hpp"

#include <regex>

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

void require_same_field(const Quadratic& x, const Quadratic& y) {
  if (x.d() != y.d()) throw std::invalid_argument("quadratic elements from different fields");
}

Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

// floor(b * sqrt(d)) for d not a perfect square.
Integer floor_root_multiple(const Integer& b, const Integer& d) {
  if (b == 0) return 0;
  Integer root = isqrt(b * b * d);
  return b > 0 ? root : Integer(-root - 1);
}

}  // namespace

void extract_square(const Integer& n, Integer& k, Integer& m) {
  k = 1;
  m = n;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    k = isqrt(m);
    m = 1;
    return;
  }
  for (unsigned long p = 2; p < 100000; ++p) {
    const Integer sq = Integer(p) * p;
    if (sq > m) break;
    while (m % sq == 0) {
      m /= sq;
      k *= p;
    }
  }
}

Quadratic::Quadratic(Rational r, Rational s, Integer d)
    : r_(std::move(r)), s_(std::move(s)), d_(std::move(d)) {
  if (d_ < 2 || mpz_perfect_square_p(d_.get_mpz_t())) {
    throw std::invalid_argument("quadratic radicand must not be a perfect square");
  }
}

Quadratic Quadratic::from_parts(const Integer& a, const Integer& b,
                                const Integer& d, const Integer& c) {
  if (c == 0) throw ParseError("zero denominator");
  if (d < 0) throw DomainError("negative radicand");
  Integer k, m;
  extract_square(d, k, m);
  if (m == 1) throw DomainError("radicand is a perfect square; use a rational");
  return Quadratic(make_rational(a, c), make_rational(b * k, c), m);
}

Quadratic Quadratic::parse(std::string_view text) {
  static const std::regex kQuad(
      R"(^\s*\(?\s*([+-]?\d+)\s*([+-])\s*(?:(\d+)\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*\)?\s*(?:/\s*(\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kQuad)) throw ParseError("not a quadratic number: '" + s + "'");
  Integer a(m[1].str());
  Integer b = m[3].matched ? Integer(m[3].str()) : Integer(1);
  if (m[2].str() == "-") b = -b;
  Integer d(m[4].str());
  Integer c = m[5].matched ? Integer(m[5].str()) : Integer(1);
  return from_parts(a, b, d, c);
}

Quadratic::Canonical Quadratic::canonical() const {
  Integer c;
  mpz_lcm(c.get_mpz_t(), r_.get_den_mpz_t(), s_.get_den_mpz_t());
  Integer a = r_.get_num() * (c / r_.get_den());
  Integer b = s_.get_num() * (c / s_.get_den());
  return {a, b, c};
}

int Quadratic::sign() const {
  const int sr = sgn(r_);
  const int ss = sgn(s_);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // opposite signs: compare r^2 against s^2 d
  const int cmp_val = cmp(r_ * r_, s_ * s_ * d_);
  return cmp_val > 0 ? sr : ss;
}

GridPoint Quadratic::grid() const {
  if (is_rational()) return grid_point(r_);
  auto [a, b, c] = canonical();
  Integer n = a + floor_root_multiple(b, d_);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
  return {out, false};
}

Interval Quadratic::enclose(long bits) const {
  if (is_rational()) return Interval(r_);
  const Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(bits);
  const Integer root = isqrt(d_ * scale * scale);
  Interval sqrt_d(make_rational(root, scale), make_rational(root + 1, scale));
  return (Interval(r_) + Interval(s_) * sqrt_d).rounded(bits);
}

Quadratic operator+(const Quadratic& x, const Quadratic& y) {
  require_same_field(x, y);
  return Quadratic(x.r_ + y.r_, x.s_ + y.s_, x.d_);
}

Quadratic operator-(const Quadratic& x, const Quadratic& y) {
  require_same_field(x, y);
  return Quadratic(x.r_ - y.r_, x.s_ - y.s_, x.d_);
}

Quadratic operator*(const Quadratic& x, const Quadratic& y) {
  require_same_field(x, y);
  return Quadratic(x.r_ * y.r_ + x.s_ * y.s_ * x.d_, x.r_ * y.s_ + x.s_ * y.r_, x.d_);
}

Quadratic operator/(const Quadratic& x, const Quadratic& y) {
  require_same_field(x, y);
  const Rational n = y.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  Quadratic num = x * y.conjugate();
  return Quadratic(num.r_ / n, num.s_ / n, x.d_);
}

Quadratic operator+(const Quadratic& x, const Rational& y) {
  return Quadratic(x.r_ + y, x.s_, x.d_);
}

Quadratic operator*(const Quadratic& x, const Rational& y) {
  return Quadratic(x.r_ * y, x.s_ * y, x.d_);
}

std::string Quadratic::to_string() const {
  auto [a, b, c] = canonical();
  std::string out = "(" + a.get_str() + (b < 0 ? "-" : "+") +
                    Integer(abs(b)).get_str() + "*sqrt(" + d_.get_str() + "))";
  if (c != 1) out += "/" + c.get_str();
  return out;
}

std::string Quadratic::key() const {
  return "q:" + betaorbit::to_string(r_) + ":" + betaorbit::to_string(s_) + ":" + d_.get_str();
}

}  // namespace betaorbit
