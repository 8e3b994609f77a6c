// The number tower used for bases and
// points: exact rationals, quadratic irrationals, algebraic numbers given by
// an isolating interval, and validated reals known only through enclosures.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betaorbit/algebraic.hpp"
#include "betaorbit/interval.hpp"
#include "betaorbit/quadratic.hpp"
#include "betaorbit/rational.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit {

/// Working precision for validated reals, in decimal digits. Decisions start
/// at start_digits and double until max_digits is exceeded.
struct PrecisionPolicy {
  long start_digits = 128;
  long max_digits = 2048;
};

PrecisionPolicy default_precision();
void set_default_precision(const PrecisionPolicy& p);

/// A real number known through enclosures of any requested width.
class ValidatedReal {
 public:
  using Encloser = std::function<Interval(long bits)>;

  ValidatedReal(Encloser fn, std::string label);

  static ValidatedReal exact(const Rational& q);
  static ValidatedReal pi();
  /// A decimal literal taken at face value; `digits` is its declared precision.
  static ValidatedReal decimal(const Rational& value, long digits);

  /// Encloses the value; width at most about 2^-bits.
  Interval enclose(long bits) const;
  const std::string& label() const;
  std::optional<long> declared_digits() const { return declared_digits_; }

  ValidatedReal operator-() const;
  friend ValidatedReal operator+(const ValidatedReal& x, const ValidatedReal& y);
  friend ValidatedReal operator-(const ValidatedReal& x, const ValidatedReal& y);
  friend ValidatedReal operator*(const ValidatedReal& x, const ValidatedReal& y);
  friend ValidatedReal operator/(const ValidatedReal& x, const ValidatedReal& y);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::optional<long> declared_digits_;
};

class RealValue {
 public:
  enum class Kind { Rational, Quadratic, Algebraic, Validated };

  RealValue() : v_(Rational(0)) {}
  RealValue(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  RealValue(long n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)
  RealValue(Quadratic q);                      // NOLINT(google-explicit-constructor)
  RealValue(AlgebraicElement a);               // NOLINT(google-explicit-constructor)
  RealValue(ValidatedReal v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  Kind kind() const;
  bool is_exact() const { return kind() != Kind::Validated; }
  const Rational* rational() const { return std::get_if<Rational>(&v_); }
  const Quadratic* quadratic() const { return std::get_if<Quadratic>(&v_); }
  const AlgebraicElement* algebraic() const { return std::get_if<AlgebraicElement>(&v_); }
  const ValidatedReal* validated() const { return std::get_if<ValidatedReal>(&v_); }

  Interval enclose(long bits) const;
  ValidatedReal to_validated() const;

  /// Exact for exact kinds; validated reals escalate precision and throw
  /// PrecisionExhausted when the policy cap is reached.
  int sign(const PrecisionPolicy& policy = default_precision()) const;
  GridPoint grid(const PrecisionPolicy& policy = default_precision()) const;

  /// Exact identity usable as a hash key; throws for validated reals.
  std::string key() const;
  /// Exact textual form, or "mid±radius" for validated reals.
  std::string to_string(int digits = 30) const;
  /// "exact-rational", "quadratic", "algebraic" or "enclosure±r".
  std::string repr_tag(int digits = 30) const;
  std::string to_decimal(int digits) const;

  RealValue operator-() const;
  friend RealValue operator+(const RealValue& x, const RealValue& y);
  friend RealValue operator-(const RealValue& x, const RealValue& y);
  friend RealValue operator*(const RealValue& x, const RealValue& y);
  friend RealValue operator/(const RealValue& x, const RealValue& y);

 private:
  using Variant = std::variant<Rational, Quadratic, AlgebraicElement, ValidatedReal>;
  explicit RealValue(Variant v) : v_(std::move(v)) {}
  template <class Op>
  friend RealValue combine(const RealValue& x, const RealValue& y, Op op);

  Variant v_;
};

std::string_view to_string(RealValue::Kind k);

Ordering compare(const RealValue& x, const RealValue& y,
                 const PrecisionPolicy& policy = default_precision());
GridPoint compare_to_integer_grid(const RealValue& x,
                                  const PrecisionPolicy& policy = default_precision());
RealValue pow(const RealValue& x, unsigned long n);

/// Parses int:N, rat:P/Q, quad:(A+B*sqrt(D))/C, pi,
/// poly:[c0,c1,...]@(lo,hi), dec:M@P, or a bare rational.
RealValue parse_real(std::string_view text);

/// A base beta > 1.
class BetaNumber {
 public:
  explicit BetaNumber(RealValue value, std::string spec = "");
  static BetaNumber parse(std::string_view text);

  const RealValue& value() const noexcept { return value_; }
  RealValue::Kind kind() const { return value_.kind(); }
  const std::string& spec() const noexcept { return spec_; }
  std::optional<Integer> as_integer() const;
  Integer floor() const;
  /// ceil(beta), so the digit alphabet is {0, ..., alphabet_size() - 1}.
  Integer alphabet_size() const;

 private:
  RealValue value_;
  std::string spec_;
};

/// The root of an integer polynomial (low degree first) isolated in the open
/// interval (lo, hi), in the cheapest exact representation.
RealValue isolate_dominant_root(const std::vector<Integer>& coeffs,
                                const Rational& lo, const Rational& hi);

/// sum a_i beta^-i over the letters of w.
RealValue eval_word(const FiniteWord& w, const RealValue& beta);
/// Closed form for u v^omega via the geometric series.
RealValue eval_word(const EpWord& w, const RealValue& beta);
inline RealValue eval_word(const FiniteWord& w, const BetaNumber& beta) {
  return eval_word(w, beta.value());
}
inline RealValue eval_word(const EpWord& w, const BetaNumber& beta) {
  return eval_word(w, beta.value());
}

}  // namespace betaorbit
