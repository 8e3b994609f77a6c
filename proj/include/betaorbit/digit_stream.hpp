// Lazily generated infinite words.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "betaorbit/words.hpp"

namespace betaorbit {

/// Produces the letters of an infinite word one at a time.
class DigitSource {
 public:
  virtual ~DigitSource() = default;
  /// Next letter; may throw PrecisionExhausted, never returns a wrong letter.
  virtual Letter next() = 0;
  /// The whole word as u v^omega once the source knows it.
  virtual std::optional<EpWord> exact_form() const { return std::nullopt; }
};

/// A cached view on a DigitSource. Copies share the cache and the source, so
/// a stream and all its shifts must stay with a single owner thread.
class DigitStream {
 public:
  explicit DigitStream(std::unique_ptr<DigitSource> source);

  static DigitStream from_word(const EpWord& w);

  Letter at(std::size_t i);
  FiniteWord prefix(std::size_t n);

  /// Exact form from the current offset, if the source already knows it.
  std::optional<EpWord> exact() const;
  /// Pull letters until the exact form is known or `max_letters` letters
  /// (counted from the offset) have been materialized.
  std::optional<EpWord> resolve_exact(std::size_t max_letters);

  DigitStream shifted(std::size_t n) const;
  std::size_t offset() const noexcept { return offset_; }
  /// Letters already cached past the offset.
  std::size_t materialized() const;

 private:
  struct State {
    std::unique_ptr<DigitSource> source;
    std::vector<Letter> cache;
  };

  void fill(std::size_t absolute_index);

  std::shared_ptr<State> state_;
  std::size_t offset_ = 0;
};

/// w followed by the letters of `tail`.
DigitStream concat(const FiniteWord& w, const DigitStream& tail);

/// Uses the exact form when one is known; otherwise compares letter by letter
/// and reports Undecided after `horizon` equal letters.
Ordering lex_compare(DigitStream u, const EpWord& v, std::size_t horizon);
Ordering lex_compare(const EpWord& u, DigitStream v, std::size_t horizon);
Ordering lex_compare(DigitStream u, DigitStream v, std::size_t horizon);

DigitStream shift(const DigitStream& s, std::size_t n);

}  // namespace betaorbit
