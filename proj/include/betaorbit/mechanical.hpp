// Mechanical, characteristic, Christoffel
// and skew words, balance and the mechanical/skew classification.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "betaorbit/real_value.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit {

struct MechSpec {
  RealValue slope;
  RealValue intercept{0L};
  bool upper = false;
};

/// s(n) = floor(alpha(n+1)+rho) - floor(alpha n+rho), or the ceiling analogue.
FiniteWord mechanical_prefix(const MechSpec& spec, std::size_t n);

/// Periodic mechanical word of slope p/q (lower or upper) as an EpWord.
EpWord mechanical_word(const Integer& p, const Integer& q, bool upper = false);

struct Christoffel {
  FiniteWord lower;
  FiniteWord upper;
  FiniteWord central;
};

/// t = a z b and t' = b z a for slope p/q. For integer slopes both words are
/// the single letter p and z is empty.
Christoffel christoffel(const Integer& p, const Integer& q);

/// c_alpha: the common tail of s_{alpha,0} and s'_{alpha,0}.
FiniteWord characteristic_prefix(const RealValue& slope, std::size_t n);

struct BalanceResult {
  bool balanced = true;
  /// Palindrome u with a u a and b u b both factors, when unbalanced.
  std::optional<FiniteWord> witness;
};

BalanceResult is_balanced(const EpWord& w);

namespace verdict {
struct Mechanical {
  Rational slope;
  EpWord representative;
};
struct Skew {
  Rational slope;
  std::size_t preperiod_len;
};
struct Unbalanced {
  FiniteWord witness;
};
/// Letters span more than two consecutive values.
struct NotBinary {
  Letter low;
  Letter high;
};
}  // namespace verdict

using Classification =
    std::variant<verdict::Mechanical, verdict::Skew, verdict::Unbalanced, verdict::NotBinary>;

Classification classify_balanced(const EpWord& w);
std::string describe(const Classification& c);

/// Prefix of length n of mu(x^l y x^omega), mu the composition of the
/// morphisms named by `script` ('a' for psi_a, 'b' for psi_b), the first
/// letter of the script applied last.
FiniteWord skew_word(const std::string& script, std::size_t l, Letter x, Letter y, std::size_t n,
                     Letter a = 0, Letter b = 1);
/// The same word in exact form mu(x^l y) mu(x)^omega.
EpWord skew_epword(const std::string& script, std::size_t l, Letter x, Letter y, Letter a = 0,
                   Letter b = 1);

}  // namespace betaorbit
