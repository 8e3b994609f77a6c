// Closed intervals with exact rational
// endpoints, rounded outward onto a dyadic grid to keep sizes bounded.

#pragma once

#include <optional>
#include <string>

#include "betaorbit/rational.hpp"

namespace betaorbit {

class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

  /// Widen outward to multiples of 2^-bits.
  Interval rounded(long bits) const;
  Interval intersect(const Interval& other) const;
  Interval hull(const Interval& other) const;

  /// -1 / +1, or 0 for the exact point zero; nullopt when undecided.
  std::optional<int> sign() const;
  /// Floor and integer-hit test; nullopt when the interval straddles or
  /// touches an integer without being that integer exactly.
  std::optional<GridPoint> grid() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InsufficientPrecision if the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const { return Interval(-hi_, -lo_); }

  std::string to_string(int digits = 20) const;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace betaorbit
