// Letters, finite words, eventually periodic
// words and the lexicographic order on them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace betaorbit {

/// A digit of A_beta = {0, ..., ceil(beta) - 1}.
using Letter = std::uint32_t;

/// Result of a lexicographic comparison. Undecided is only produced when a
/// lazily generated operand could not be told apart within the horizon.
enum class Ordering { Less, Equal, Greater, Undecided };

std::string_view to_string(Ordering o);
Ordering reverse(Ordering o);

class FiniteWord {
 public:
  FiniteWord() = default;
  FiniteWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit FiniteWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  static FiniteWord repeat(Letter a, std::size_t n) {
    return FiniteWord(std::vector<Letter>(n, a));
  }

  /// Comma-free digits when every letter is below 10 ("01101"), otherwise
  /// comma separated ("10,0,11"). "" and "ε" denote the empty word.
  static FiniteWord parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  FiniteWord substr(std::size_t pos,
                    std::size_t len = static_cast<std::size_t>(-1)) const;
  FiniteWord reversed() const;
  FiniteWord rotated_left(std::size_t k) const;
  bool is_palindrome() const;
  std::size_t count(Letter a) const;
  bool has_prefix(const FiniteWord& p) const;
  Letter max_letter() const;
  Letter min_letter() const;
  /// Distinct letters in increasing order.
  std::vector<Letter> alphabet() const;

  FiniteWord& operator+=(const FiniteWord& rhs);
  FiniteWord& operator+=(Letter a);
  friend FiniteWord operator+(FiniteWord lhs, const FiniteWord& rhs) {
    return lhs += rhs;
  }
  friend FiniteWord operator+(FiniteWord lhs, Letter a) { return lhs += a; }
  friend FiniteWord operator+(Letter a, const FiniteWord& rhs);

  bool operator==(const FiniteWord&) const = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Container order (shortlex on the raw letters). This is NOT the word order
/// of the dynamics; use lex_compare for that.
struct StructuralLess {
  bool operator()(const FiniteWord& x, const FiniteWord& y) const;
};

using FactorSet = std::set<FiniteWord, StructuralLess>;

std::size_t occurrences(const FiniteWord& w, Letter a);
FiniteWord reversal(const FiniteWord& w);
bool is_palindrome(const FiniteWord& w);

/// u v^omega kept in canonical form: the period is primitive and the
/// preperiod is as short as possible, so equality is structural.
class EpWord {
 public:
  EpWord(FiniteWord preperiod, FiniteWord period);

  static EpWord periodic(FiniteWord period) {
    return EpWord(FiniteWord{}, std::move(period));
  }
  static EpWord constant(Letter a) { return periodic(FiniteWord{a}); }
  /// The embedding w -> w 0^omega used to order finite words.
  static EpWord embed(const FiniteWord& w) { return EpWord(w, FiniteWord{0}); }

  /// "pre|per"; "|per" is purely periodic; text without '|' is a finite word
  /// embedded as w 0^omega.
  static EpWord parse(std::string_view text);

  const FiniteWord& preperiod() const noexcept { return pre_; }
  const FiniteWord& period() const noexcept { return per_; }
  bool is_purely_periodic() const noexcept { return pre_.empty(); }

  Letter at(std::size_t i) const;
  FiniteWord prefix(std::size_t n) const;
  EpWord shifted(std::size_t n) const;
  EpWord prepended(const FiniteWord& w) const;
  EpWord prepended(Letter a) const { return prepended(FiniteWord{a}); }
  Letter max_letter() const;

  bool operator==(const EpWord&) const = default;

  std::string to_string() const;

 private:
  FiniteWord pre_;
  FiniteWord per_;
};

/// Smallest d such that w is a power of its length-d prefix.
std::size_t primitive_period_length(const FiniteWord& w);

EpWord shift(const EpWord& w, std::size_t n);

/// Exact set of length-n factors of an eventually periodic word.
FactorSet factors(const EpWord& w, std::size_t n);
/// Length-n factors of a finite word.
FactorSet factors(const FiniteWord& w, std::size_t n);

/// Exact order on eventually periodic words.
Ordering lex_compare(const EpWord& u, const EpWord& v);
/// Finite words are compared through u 0^omega and v 0^omega.
Ordering lex_compare(const FiniteWord& u, const FiniteWord& v);
Ordering lex_compare(const FiniteWord& u, const EpWord& v);
Ordering lex_compare(const EpWord& u, const FiniteWord& v);

/// Plain lexicographic order of two words of the same length.
Ordering compare_blocks(const FiniteWord& u, const FiniteWord& v);

}  // namespace betaorbit
