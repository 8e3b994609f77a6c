// Palindromic closure, Pal, central
// words and their decomposition.

#pragma once

#include <cstddef>

#include "betaorbit/digit_stream.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit {

/// w = p ab q = q ba p with p, q palindromes and b = a + 1.
struct CentralDecomp {
  FiniteWord w;
  FiniteWord p;
  FiniteWord q;
  Letter a = 0;
  Letter b = 1;
};

/// Shortest palindrome having w as a prefix.
FiniteWord palindromic_closure(const FiniteWord& w);

/// Iterated palindromic closure along the directive word.
FiniteWord pal(const FiniteWord& directive);

/// Powers of one letter, and palindromes in P ab P. Throws NonBinaryWord for
/// more than two distinct letters.
bool is_central(const FiniteWord& w);

/// Throws UnaryPower for powers of a single letter, NotCentral otherwise.
CentralDecomp central_decompose(const FiniteWord& w);

/// The unique v with pal(v) = w. Throws NotCentral.
FiniteWord directive_word(const FiniteWord& w);

struct CentralPrefix {
  FiniteWord u;
  bool saturated = false;
};

/// Longest central prefix of s over {a, b} with length at most max_len.
/// saturated is set when the next candidate would exceed max_len, so a
/// longer central prefix may exist.
CentralPrefix longest_central_prefix(DigitStream s, Letter a, Letter b, std::size_t max_len);

}  // namespace betaorbit
