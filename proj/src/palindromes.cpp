#include "betaorbit/palindromes.hpp"

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

bool is_pal_range(const FiniteWord& w, std::size_t from, std::size_t to) {
  while (from + 1 < to) {
    if (w[from] != w[to - 1]) return false;
    ++from;
    --to;
  }
  return true;
}

}  // namespace

FiniteWord palindromic_closure(const FiniteWord& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_pal_range(w, i, n)) return w + w.substr(0, i).reversed();
  }
  return w;
}

FiniteWord pal(const FiniteWord& directive) {
  FiniteWord u;
  for (Letter z : directive) u = palindromic_closure(u + z);
  return u;
}

bool is_central(const FiniteWord& w) {
  const auto letters = w.alphabet();
  if (letters.size() > 2) throw NonBinaryWord("central words are binary");
  if (letters.size() <= 1) return true;
  if (!w.is_palindrome()) return false;
  const Letter a = letters[0], b = letters[1];
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == a && w[i + 1] == b && is_pal_range(w, 0, i) && is_pal_range(w, i + 2, w.size())) {
      return true;
    }
  }
  return false;
}

CentralDecomp central_decompose(const FiniteWord& w) {
  const auto letters = w.alphabet();
  if (letters.size() > 2) throw NonBinaryWord("central words are binary");
  if (letters.size() <= 1) throw UnaryPower("a power of one letter has no decomposition");
  const Letter a = letters[0], b = letters[1];
  if (w.is_palindrome()) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != a || w[i + 1] != b) continue;
      if (!is_pal_range(w, 0, i) || !is_pal_range(w, i + 2, w.size())) continue;
      FiniteWord p = w.substr(0, i);
      FiniteWord q = w.substr(i + 2);
      if (q + FiniteWord{b, a} + p == w) return {w, p, q, a, b};
    }
  }
  throw NotCentral("'" + w.to_string() + "' is not central");
}

FiniteWord directive_word(const FiniteWord& w) {
  if (w.alphabet().size() > 2) throw NonBinaryWord("central words are binary");
  FiniteWord v;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_pal_range(w, 0, i)) v += w[i];
  }
  if (pal(v) != w) throw NotCentral("'" + w.to_string() + "' is not central");
  return v;
}

CentralPrefix longest_central_prefix(DigitStream s, Letter a, Letter b, std::size_t max_len) {
  CentralPrefix out;
  for (;;) {
    const Letter c = s.at(out.u.size());
    if (c != a && c != b) return out;
    FiniteWord cand = palindromic_closure(out.u + c);
    if (cand.size() > max_len) {
      out.saturated = true;
      return out;
    }
    for (std::size_t i = out.u.size() + 1; i < cand.size(); ++i) {
      if (s.at(i) != cand[i]) return out;
    }
    out.u = std::move(cand);
  }
}

}  // namespace betaorbit
