#include "betaorbit/interval.hpp"

#include <algorithm>
#include <array>

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

Rational round_down(const Rational& q, long bits) {
  Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(bits);
  if (scale % q.get_den() == 0) return q;
  Integer n = floor_of(q * Rational(scale));
  return make_rational(n, scale);
}

Rational round_up(const Rational& q, long bits) {
  Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(bits);
  if (scale % q.get_den() == 0) return q;
  Integer n = ceil_of(q * Rational(scale));
  return make_rational(n, scale);
}

}  // namespace

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::rounded(long bits) const {
  return Interval(round_down(lo_, bits), round_up(hi_, bits));
}

Interval Interval::intersect(const Interval& other) const {
  Rational lo = std::max(lo_, other.lo_);
  Rational hi = std::min(hi_, other.hi_);
  if (lo > hi) throw std::logic_error("disjoint enclosures of one value");
  return Interval(lo, hi);
}

Interval Interval::hull(const Interval& other) const {
  return Interval(std::min(lo_, other.lo_), std::max(hi_, other.hi_));
}

std::optional<int> Interval::sign() const {
  if (sgn(lo_) > 0) return 1;
  if (sgn(hi_) < 0) return -1;
  if (sgn(lo_) == 0 && sgn(hi_) == 0) return 0;
  return std::nullopt;
}

std::optional<GridPoint> Interval::grid() const {
  Integer fl = floor_of(lo_);
  if (is_point()) return GridPoint{fl, lo_.get_den() == 1};
  if (lo_ > Rational(fl) && hi_ < Rational(fl + 1)) return GridPoint{fl, false};
  return std::nullopt;
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
  std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_,
                            a.hi_ * b.hi_};
  return Interval(*std::min_element(p.begin(), p.end()),
                  *std::max_element(p.begin(), p.end()));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InsufficientPrecision();
  Rational inv_lo = 1 / b.hi_;
  Rational inv_hi = 1 / b.lo_;
  return a * Interval(inv_lo, inv_hi);
}

std::string Interval::to_string(int digits) const {
  Rational radius = width() / 2;
  return to_decimal(mid(), digits) + "±" + power_of_ten_bound(radius);
}

}  // namespace betaorbit
