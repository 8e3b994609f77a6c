// GMP-backed exact integers and rationals.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace betaorbit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Where a real sits relative to the integer lattice.
struct GridPoint {
  Integer floor;
  bool exact_hit = false;  // the value is the integer `floor`
};

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline GridPoint grid_point(const Rational& q) {
  return {floor_of(q), q.get_den() == 1};
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline int sign(const Rational& q) { return sgn(q); }

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q", "n", "-n" and decimals such as "1.25" (all exact).
Rational parse_rational(std::string_view text);

/// Rounded to `digits` places after the decimal point.
std::string to_decimal(const Rational& q, int digits);

/// Smallest power of ten >= r > 0, written "1e-k".
std::string power_of_ten_bound(const Rational& r);

/// Binary precision carrying `digits` significant decimal digits, with guard.
long digits_to_bits(long digits);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

}  // namespace betaorbit
