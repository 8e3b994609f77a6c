#include "betaorbit/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "betaorbit/errors.hpp"

namespace betaorbit {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "LT";
    case Ordering::Equal:
      return "EQ";
    case Ordering::Greater:
      return "GT";
    case Ordering::Undecided:
      return "UndecidedAtHorizon";
  }
  return "?";
}

Ordering reverse(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

// ---------------------------------------------------------------------------
// FiniteWord

namespace {

Letter parse_letter(std::string_view token, std::string_view whole) {
  Letter value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      token.empty()) {
    throw ParseError("bad letter '" + std::string(token) + "' in word '" +
                     std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FiniteWord FiniteWord::parse(std::string_view text) {
  if (text.empty() || text == "ε") return {};
  std::vector<Letter> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(start, comma - start);
      if (!token.empty()) out.push_back(parse_letter(token, text));
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("bad letter '" + std::string(1, c) + "' in word '" +
                         std::string(text) + "'");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
  }
  return FiniteWord(std::move(out));
}

FiniteWord FiniteWord::substr(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  len = std::min(len, letters_.size() - pos);
  return FiniteWord(std::vector<Letter>(letters_.begin() + pos,
                                        letters_.begin() + pos + len));
}

FiniteWord FiniteWord::reversed() const {
  return FiniteWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

FiniteWord FiniteWord::rotated_left(std::size_t k) const {
  if (letters_.empty()) return {};
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + (k % out.size()), out.end());
  return FiniteWord(std::move(out));
}

bool FiniteWord::is_palindrome() const {
  return std::equal(letters_.begin(), letters_.begin() + letters_.size() / 2,
                    letters_.rbegin());
}

std::size_t FiniteWord::count(Letter a) const {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), a));
}

bool FiniteWord::has_prefix(const FiniteWord& p) const {
  return p.size() <= size() &&
         std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

Letter FiniteWord::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(),
                                                  letters_.end());
}

Letter FiniteWord::min_letter() const {
  return letters_.empty() ? 0 : *std::min_element(letters_.begin(),
                                                  letters_.end());
}

std::vector<Letter> FiniteWord::alphabet() const {
  std::vector<Letter> out(letters_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteWord& FiniteWord::operator+=(const FiniteWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

FiniteWord& FiniteWord::operator+=(Letter a) {
  letters_.push_back(a);
  return *this;
}

FiniteWord operator+(Letter a, const FiniteWord& rhs) {
  std::vector<Letter> out;
  out.reserve(rhs.size() + 1);
  out.push_back(a);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return FiniteWord(std::move(out));
}

std::string FiniteWord::to_string() const {
  const bool small = std::all_of(letters_.begin(), letters_.end(),
                                 [](Letter a) { return a < 10; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!small && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

bool StructuralLess::operator()(const FiniteWord& x,
                                const FiniteWord& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  return x.letters() < y.letters();
}

std::size_t occurrences(const FiniteWord& w, Letter a) { return w.count(a); }
FiniteWord reversal(const FiniteWord& w) { return w.reversed(); }
bool is_palindrome(const FiniteWord& w) { return w.is_palindrome(); }

// ---------------------------------------------------------------------------
// EpWord

std::size_t primitive_period_length(const FiniteWord& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

EpWord::EpWord(FiniteWord preperiod, FiniteWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw ParseError("eventually periodic word needs a period");
  per_ = per_.substr(0, primitive_period_length(per_));
  // Fold trailing preperiod letters into the period.
  std::vector<Letter> pre(pre_.letters());
  std::vector<Letter> per(per_.letters());
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  pre_ = FiniteWord(std::move(pre));
  per_ = FiniteWord(std::move(per));
}

EpWord EpWord::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) return embed(FiniteWord::parse(text));
  return EpWord(FiniteWord::parse(text.substr(0, bar)),
                FiniteWord::parse(text.substr(bar + 1)));
}

Letter EpWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

FiniteWord EpWord::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return FiniteWord(std::move(out));
}

EpWord EpWord::shifted(std::size_t n) const {
  if (n <= pre_.size()) return EpWord(pre_.substr(n), per_);
  return EpWord(FiniteWord{}, per_.rotated_left((n - pre_.size()) % per_.size()));
}

EpWord EpWord::prepended(const FiniteWord& w) const {
  return EpWord(w + pre_, per_);
}

Letter EpWord::max_letter() const {
  return std::max(pre_.max_letter(), per_.max_letter());
}

std::string EpWord::to_string() const {
  return pre_.to_string() + "|" + per_.to_string();
}

EpWord shift(const EpWord& w, std::size_t n) { return w.shifted(n); }

FactorSet factors(const EpWord& w, std::size_t n) {
  FactorSet out;
  if (n == 0) {
    out.insert(FiniteWord{});
    return out;
  }
  const std::size_t p = w.period().size();
  const std::size_t reps = (n - 1 + p - 1) / p + 2;
  FiniteWord window = w.preperiod();
  for (std::size_t r = 0; r < reps; ++r) window += w.period();
  const std::size_t starts = w.preperiod().size() + p;
  for (std::size_t i = 0; i < starts && i + n <= window.size(); ++i) {
    out.insert(window.substr(i, n));
  }
  return out;
}

FactorSet factors(const FiniteWord& w, std::size_t n) {
  FactorSet out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

Ordering lex_compare(const EpWord& u, const EpWord& v) {
  if (u == v) return Ordering::Equal;
  // Two eventually periodic words that agree on this many letters are equal
  // (Fine and Wilf applied past both preperiods).
  const std::size_t bound =
      std::max(u.preperiod().size(), v.preperiod().size()) +
      u.period().size() + v.period().size();
  for (std::size_t i = 0; i <= bound; ++i) {
    const Letter x = u.at(i);
    const Letter y = v.at(i);
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  // Canonical forms differ but no letter does: impossible.
  throw std::logic_error("EpWord canonical form is inconsistent");
}

Ordering lex_compare(const FiniteWord& u, const FiniteWord& v) {
  const std::size_t n = std::max(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Letter x = i < u.size() ? u[i] : 0;
    const Letter y = i < v.size() ? v[i] : 0;
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

Ordering lex_compare(const FiniteWord& u, const EpWord& v) {
  return lex_compare(EpWord::embed(u), v);
}

Ordering lex_compare(const EpWord& u, const FiniteWord& v) {
  return lex_compare(u, EpWord::embed(v));
}

Ordering compare_blocks(const FiniteWord& u, const FiniteWord& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("compare_blocks needs equal lengths");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

}  // namespace betaorbit
