// Brute-force reference implementations used
// to cross-check the library. Nothing here calls into the word, palindrome,
// mechanical or dynamics code.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "betaorbit/digit_stream.hpp"
#include "betaorbit/interval.hpp"
#include "betaorbit/real_value.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit::oracle {

using Letters = std::vector<Letter>;

struct OrbitTrace {
  bool exact = true;
  /// Iterates x0, T(x0), ... (exact mode).
  std::vector<RealValue> points;
  /// Iterates as enclosures (both modes).
  std::vector<Interval> enclosures;
  bool cycle_closed = false;
  /// Index of the first state on the cycle when one closed.
  std::size_t cycle_start = 0;

  /// Exact extremes over points[from..]; exact mode only.
  RealValue min(std::size_t from = 0) const;
  RealValue max(std::size_t from = 0) const;
  RealValue diameter(std::size_t from = 0) const;
  /// Enclosure of max - min over enclosures[from..].
  Interval diameter_enclosure(std::size_t from = 0) const;
};

/// Iterates T-bar from x0 for at most `steps` maps, stopping early when an
/// exact state repeats.
OrbitTrace simulate_orbit(const RealValue& x0, const BetaNumber& beta, std::size_t steps);

/// True when every iterate lies in [lo, hi]; exact mode only.
bool orbit_within(const OrbitTrace& trace, const RealValue& lo, const RealValue& hi);

/// Every canonical u v^omega over {0..ceil(beta)-1} with |u| <= max_pre,
/// 1 <= |v| <= max_per whose shifts all stay below the expansion of 1.
/// A shift that ties with the expansion over `horizon` letters is rejected.
std::vector<EpWord> enumerate_admissible_epwords(const Rational& beta, std::size_t max_pre,
                                                 std::size_t max_per,
                                                 std::size_t horizon = 200);

/// Mean of the first n letters.
Rational frequency_estimate(DigitStream stream, std::size_t n);

// Naive versions of the main-path routines.
Letters letters_of(const EpWord& w, std::size_t n);
Rational naive_eval(const EpWord& w, const Rational& beta);
Letters naive_bar_digits(Rational x, const Rational& beta, std::size_t n);
/// -1, 0, +1.
int naive_compare(const EpWord& u, const EpWord& v);
int naive_compare(const Letters& u, const Letters& v);
std::set<Letters> naive_factors(const EpWord& w, std::size_t n);
bool naive_balanced(const EpWord& w, std::size_t max_len);
bool naive_palindrome(const Letters& w);
Letters naive_closure(const Letters& w);
Letters naive_pal(const Letters& directive);
/// Central words of length n over {a, b}: images of Pal plus unary powers.
std::set<Letters> naive_central_words(std::size_t n, Letter a = 0, Letter b = 1);
bool naive_is_central(const Letters& w);
/// Sorted cyclic rotation class representative of a primitive period.
Letters rotation_class(const Letters& period);

/// A decimal stand-in for a base whose expansion of 1 follows the Fibonacci
/// Sturmian word for well over a hundred letters.
inline constexpr const char* kSturmianLikeBeta =
    "dec:1.83524463578171158396416179170095023101332013663119263032541211015550475547128285@80";

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names of the cross-check suites, in order.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

}  // namespace betaorbit::oracle
