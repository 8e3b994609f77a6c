// The maps T and T-bar, greedy and bar
// expansions, and the admissibility test.

#pragma once

#include <cstddef>
#include <optional>

#include "betaorbit/digit_stream.hpp"
#include "betaorbit/real_value.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit {

enum class ExpansionKind { Greedy, Bar };

/// Exact orbit states remembered for cycle detection.
inline constexpr std::size_t kCycleStateCap = 1'000'000;

/// Greedy: beta x mod 1. Bar: <beta x>, which is 1 at integer hits.
RealValue t_map(const RealValue& x, const BetaNumber& beta, ExpansionKind kind);

/// Digits of x in base beta. With exact x and beta the orbit is tracked
/// exactly and the stream learns its u v^omega form once a state repeats.
/// Validated inputs go through interval iteration with precision restarts.
/// The bar expansion of 0 is taken to be 0^omega.
DigitStream expand(const RealValue& x, const BetaNumber& beta, ExpansionKind kind,
                   const PrecisionPolicy& policy = default_precision());

/// Exact form of expand(...), searching at most `max_letters` digits.
/// Throws CycleCapExceeded when no cycle shows up in that budget.
EpWord expand_exact(const RealValue& x, const BetaNumber& beta, ExpansionKind kind,
                    std::size_t max_letters = kCycleStateCap);

DigitStream bar_of_one(const BetaNumber& beta,
                       const PrecisionPolicy& policy = default_precision());

/// a_1...a_{m-1}(a_m - 1) followed by d1 when the greedy expansion is
/// finite; the greedy expansion itself otherwise.
DigitStream bar_from_greedy(const EpWord& greedy, const DigitStream& d1);
/// (e_1...e_{m-1}(e_m - 1))^omega from a finite greedy expansion of 1.
EpWord bar_of_one_from_greedy(const EpWord& greedy_of_one);

/// sigma^n(s) < d1 for every n. Exact when both words are eventually
/// periodic; otherwise each shift is compared within `horizon` letters and
/// nullopt means undecided.
bool is_admissible(const EpWord& s, const EpWord& d1);
std::optional<bool> is_admissible(const EpWord& s, DigitStream d1, std::size_t horizon);
std::optional<bool> is_admissible(DigitStream s, DigitStream d1, std::size_t horizon);

/// Mean letter of the period.
Rational frequency(const EpWord& w);

}  // namespace betaorbit
