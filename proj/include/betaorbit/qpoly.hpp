// Dense univariate polynomials over Q,
// coefficients stored low degree first.

#pragma once

#include <utility>
#include <vector>

#include "betaorbit/interval.hpp"
#include "betaorbit/rational.hpp"

namespace betaorbit::poly {

using QPoly = std::vector<Rational>;

void trim(QPoly& p);
/// -1 for the zero polynomial.
int degree(const QPoly& p);
bool is_zero(const QPoly& p);

QPoly from_integers(const std::vector<Integer>& coeffs);
QPoly constant(const Rational& c);
/// The polynomial x.
QPoly identity();

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly mod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);
/// Returns (g, s) with s*a == g (mod m) and g = gcd(a, m) monic.
std::pair<QPoly, QPoly> half_extended_gcd(const QPoly& a, const QPoly& m);
QPoly derivative(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

Rational eval(const QPoly& p, const Rational& x);
Interval eval(const QPoly& p, const Interval& x);

/// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi);

}  // namespace betaorbit::poly
