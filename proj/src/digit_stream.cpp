#include "betaorbit/digit_stream.hpp"

#include <utility>

namespace betaorbit {

namespace {

class EpWordSource final : public DigitSource {
 public:
  explicit EpWordSource(EpWord w) : word_(std::move(w)) {}
  Letter next() override { return word_.at(index_++); }
  std::optional<EpWord> exact_form() const override { return word_; }

 private:
  EpWord word_;
  std::size_t index_ = 0;
};

class ConcatSource final : public DigitSource {
 public:
  ConcatSource(FiniteWord head, DigitStream tail)
      : head_(std::move(head)), tail_(std::move(tail)) {}

  Letter next() override {
    const std::size_t i = index_++;
    if (i < head_.size()) return head_[i];
    return tail_.at(i - head_.size());
  }

  std::optional<EpWord> exact_form() const override {
    if (auto t = tail_.exact()) return t->prepended(head_);
    return std::nullopt;
  }

 private:
  FiniteWord head_;
  // at() is non-const; the source owns its own handle on the tail.
  mutable DigitStream tail_;
  std::size_t index_ = 0;
};

}  // namespace

DigitStream::DigitStream(std::unique_ptr<DigitSource> source)
    : state_(std::make_shared<State>()) {
  state_->source = std::move(source);
}

DigitStream DigitStream::from_word(const EpWord& w) {
  return DigitStream(std::make_unique<EpWordSource>(w));
}

void DigitStream::fill(std::size_t absolute_index) {
  auto& cache = state_->cache;
  while (cache.size() <= absolute_index) {
    cache.push_back(state_->source->next());
  }
}

Letter DigitStream::at(std::size_t i) {
  const std::size_t abs = offset_ + i;
  if (abs >= state_->cache.size()) {
    if (auto ex = state_->source->exact_form()) return ex->at(abs);
    fill(abs);
  }
  return state_->cache[abs];
}

FiniteWord DigitStream::prefix(std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return FiniteWord(std::move(out));
}

std::optional<EpWord> DigitStream::exact() const {
  if (auto ex = state_->source->exact_form()) return ex->shifted(offset_);
  return std::nullopt;
}

std::optional<EpWord> DigitStream::resolve_exact(std::size_t max_letters) {
  for (std::size_t i = 0;; ++i) {
    if (auto ex = exact()) return ex;
    if (i >= max_letters) return std::nullopt;
    const std::size_t abs = offset_ + i;
    if (abs >= state_->cache.size()) fill(abs);
  }
}

DigitStream DigitStream::shifted(std::size_t n) const {
  DigitStream out(*this);
  out.offset_ += n;
  return out;
}

std::size_t DigitStream::materialized() const {
  return state_->cache.size() > offset_ ? state_->cache.size() - offset_ : 0;
}

DigitStream concat(const FiniteWord& w, const DigitStream& tail) {
  return DigitStream(std::make_unique<ConcatSource>(w, tail));
}

DigitStream shift(const DigitStream& s, std::size_t n) { return s.shifted(n); }

Ordering lex_compare(DigitStream u, const EpWord& v, std::size_t horizon) {
  for (std::size_t i = 0; i < horizon; ++i) {
    if (auto ex = u.exact()) return lex_compare(*ex, v);
    const Letter x = u.at(i);
    const Letter y = v.at(i);
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  if (auto ex = u.exact()) return lex_compare(*ex, v);
  return Ordering::Undecided;
}

Ordering lex_compare(const EpWord& u, DigitStream v, std::size_t horizon) {
  return reverse(lex_compare(std::move(v), u, horizon));
}

Ordering lex_compare(DigitStream u, DigitStream v, std::size_t horizon) {
  for (std::size_t i = 0; i < horizon; ++i) {
    auto eu = u.exact();
    auto ev = v.exact();
    if (eu && ev) return lex_compare(*eu, *ev);
    const Letter x = u.at(i);
    const Letter y = v.at(i);
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  auto eu = u.exact();
  auto ev = v.exact();
  if (eu && ev) return lex_compare(*eu, *ev);
  return Ordering::Undecided;
}

}  // namespace betaorbit
