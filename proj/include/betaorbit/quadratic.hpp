// Exact arithmetic in Q(sqrt d).

#pragma once

#include <string>
#include <string_view>

#include "betaorbit/interval.hpp"
#include "betaorbit/rational.hpp"

namespace betaorbit {

/// r + s*sqrt(d) with d > 1 not a perfect square. Elements with different d
/// live in different fields and cannot be combined.
class Quadratic {
 public:
  Quadratic(Rational r, Rational s, Integer d);
  /// (a + b*sqrt(d)) / c; square factors of d are pulled out.
  static Quadratic from_parts(const Integer& a, const Integer& b,
                              const Integer& d, const Integer& c);
  /// Parses "(A+B*sqrt(D))/C"; "/C" and "B*" are optional.
  static Quadratic parse(std::string_view text);

  const Rational& r() const noexcept { return r_; }
  const Rational& s() const noexcept { return s_; }
  const Integer& d() const noexcept { return d_; }
  bool is_rational() const { return sgn(s_) == 0; }

  /// Canonical (a, b, c) with value (a + b*sqrt(d))/c, c > 0, gcd(a,b,c) = 1.
  struct Canonical {
    Integer a, b, c;
  };
  Canonical canonical() const;

  int sign() const;
  GridPoint grid() const;
  Quadratic conjugate() const { return Quadratic(r_, -s_, d_); }
  Rational norm() const { return r_ * r_ - s_ * s_ * d_; }
  Interval enclose(long bits) const;

  Quadratic operator-() const { return Quadratic(-r_, -s_, d_); }
  friend Quadratic operator+(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator-(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator*(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator/(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator+(const Quadratic& x, const Rational& y);
  friend Quadratic operator*(const Quadratic& x, const Rational& y);
  bool operator==(const Quadratic& o) const {
    return r_ == o.r_ && s_ == o.s_ && d_ == o.d_;
  }

  /// "(a+b*sqrt(d))/c"
  std::string to_string() const;
  /// Hashable exact identity.
  std::string key() const;

 private:
  Rational r_;
  Rational s_;
  Integer d_;
};

/// Splits n > 0 as k^2 * m with m free of square factors below a search bound.
void extract_square(const Integer& n, Integer& k, Integer& m);

}  // namespace betaorbit
