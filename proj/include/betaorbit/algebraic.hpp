// Exact arithmetic in Q(beta) for a real
// algebraic beta given by a polynomial and an isolating interval.
//
// The defining polynomial need not be irreducible. Zero tests go through
// gcd(r, P): a common factor vanishes at beta exactly when it changes sign
// across the isolating interval, and the modulus is replaced by the factor
// that beta actually satisfies, so zero divisors never survive.

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "betaorbit/interval.hpp"
#include "betaorbit/qpoly.hpp"
#include "betaorbit/rational.hpp"

namespace betaorbit {

class AlgebraicField {
 public:
  /// Validates that `p` has exactly one real root in the open interval
  /// (lo, hi). Throws NoRoot / MultipleRoots otherwise.
  static std::shared_ptr<AlgebraicField> create(const poly::QPoly& p,
                                                const Rational& lo,
                                                const Rational& hi);

  /// Current modulus (monic, squarefree, vanishing at beta).
  poly::QPoly modulus() const;
  int degree() const;
  /// Current isolating interval; a point interval when beta is rational.
  Interval isolating_interval() const;

  /// Sign of r(beta).
  int sign_at_root(const poly::QPoly& r);
  /// Floor of r(beta) and whether r(beta) is that integer.
  GridPoint grid_at_root(const poly::QPoly& r);
  /// Enclosure of r(beta) of width at most about 2^-bits.
  Interval enclose(const poly::QPoly& r, long bits);
  poly::QPoly reduce(const poly::QPoly& r) const;
  poly::QPoly multiply(const poly::QPoly& x, const poly::QPoly& y);
  /// Throws std::domain_error when r(beta) = 0.
  poly::QPoly inverse(const poly::QPoly& r);

  /// Rational value of beta if the modulus has dropped to degree one.
  std::optional<Rational> rational_root() const;

  std::string describe() const;

 private:
  AlgebraicField(poly::QPoly p, Rational lo, Rational hi);

  // All helpers below expect mutex_ to be held.
  bool vanishes_locked(const poly::QPoly& r);
  void bisect_locked();
  Interval enclose_locked(const poly::QPoly& r, long bits);
  void replace_modulus_locked(poly::QPoly p);

  mutable std::mutex mutex_;
  poly::QPoly p_;
  Rational lo_;
  Rational hi_;
};

class AlgebraicElement {
 public:
  AlgebraicElement(std::shared_ptr<AlgebraicField> field, poly::QPoly rep);
  static AlgebraicElement generator(std::shared_ptr<AlgebraicField> field);
  static AlgebraicElement constant(std::shared_ptr<AlgebraicField> field,
                                   const Rational& c);

  const std::shared_ptr<AlgebraicField>& field() const noexcept { return field_; }
  const poly::QPoly& rep() const noexcept { return rep_; }

  int sign() const { return field_->sign_at_root(rep_); }
  GridPoint grid() const { return field_->grid_at_root(rep_); }
  Interval enclose(long bits) const { return field_->enclose(rep_, bits); }
  /// Rational value if the representative is constant after reduction.
  std::optional<Rational> as_rational() const;

  AlgebraicElement operator-() const;
  friend AlgebraicElement operator+(const AlgebraicElement& x, const AlgebraicElement& y);
  friend AlgebraicElement operator-(const AlgebraicElement& x, const AlgebraicElement& y);
  friend AlgebraicElement operator*(const AlgebraicElement& x, const AlgebraicElement& y);
  friend AlgebraicElement operator/(const AlgebraicElement& x, const AlgebraicElement& y);
  AlgebraicElement plus(const Rational& c) const;
  AlgebraicElement times(const Rational& c) const;

  /// Hashable exact identity, valid for elements of one field.
  std::string key() const;
  std::string to_string() const;

 private:
  std::shared_ptr<AlgebraicField> field_;
  poly::QPoly rep_;
};

}  // namespace betaorbit
