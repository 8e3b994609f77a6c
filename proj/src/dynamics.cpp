#include "betaorbit/dynamics.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

Letter to_letter(const Integer& z) {
  if (z < 0 || !z.fits_ulong_p()) throw std::logic_error("digit out of range");
  return static_cast<Letter>(z.get_ui());
}

void require_unit_interval(const RealValue& x) {
  if (x.sign() < 0 || compare(x, RealValue(1L)) == Ordering::Greater) {
    throw DomainError("x must lie in [0, 1]");
  }
}

class ExactOrbitSource final : public DigitSource {
 public:
  ExactOrbitSource(RealValue x, RealValue beta, ExpansionKind kind)
      : x_(std::move(x)), beta_(std::move(beta)), kind_(kind) {}

  Letter next() override {
    if (exact_) return exact_->at(index_++);
    if (tracking_) {
      auto [it, inserted] = seen_.emplace(x_.key(), digits_.size());
      if (!inserted) {
        const std::size_t j = it->second;
        std::vector<Letter> pre(digits_.begin(), digits_.begin() + static_cast<long>(j));
        std::vector<Letter> per(digits_.begin() + static_cast<long>(j), digits_.end());
        exact_ = EpWord(FiniteWord(std::move(pre)), FiniteWord(std::move(per)));
        seen_.clear();
        return exact_->at(index_++);
      }
      if (seen_.size() >= kCycleStateCap) {
        tracking_ = false;
        seen_.clear();
      }
    }
    const Letter d = step();
    digits_.push_back(d);
    ++index_;
    return d;
  }

  std::optional<EpWord> exact_form() const override { return exact_; }

 private:
  Letter step() {
    if (kind_ == ExpansionKind::Bar && x_.sign() == 0) return 0;
    RealValue y = beta_ * x_;
    GridPoint g = y.grid();
    if (!g.exact_hit) {
      x_ = y - RealValue(Rational(g.floor));
      return to_letter(g.floor);
    }
    if (kind_ == ExpansionKind::Greedy) {
      x_ = RealValue(0L);
      return to_letter(g.floor);
    }
    x_ = RealValue(1L);
    return to_letter(g.floor - 1);
  }

  RealValue x_;
  RealValue beta_;
  ExpansionKind kind_;
  std::vector<Letter> digits_;
  std::unordered_map<std::string, std::size_t> seen_;
  std::optional<EpWord> exact_;
  std::size_t index_ = 0;
  bool tracking_ = true;
};

class IntervalOrbitSource final : public DigitSource {
 public:
  IntervalOrbitSource(RealValue x0, RealValue beta, ExpansionKind kind, PrecisionPolicy policy)
      : x0_(std::move(x0)),
        beta_(std::move(beta)),
        kind_(kind),
        policy_(policy),
        bits_(digits_to_bits(policy.start_digits)) {
    restart_or_escalate(false);
  }

  Letter next() override {
    for (;;) {
      if (auto d = advance(x_)) {
        digits_.push_back(*d);
        return *d;
      }
      restart_or_escalate(true);
    }
  }

 private:
  // One step of the map on x; nullopt when the digit is not decided at the
  // current precision.
  std::optional<Letter> advance(Interval& x) {
    try {
      if (kind_ == ExpansionKind::Bar && x.is_point() && sgn(x.lo()) == 0) return 0;
      Interval y = beta_.enclose(bits_) * x;
      auto g = y.grid();
      if (!g) return std::nullopt;
      if (!g->exact_hit) {
        Interval next = y - Interval(Rational(g->floor));
        x = next.is_point() ? next : next.rounded(bits_);
        return to_letter(g->floor);
      }
      if (kind_ == ExpansionKind::Greedy) {
        x = Interval(Rational(0));
        return to_letter(g->floor);
      }
      x = Interval(Rational(1));
      return to_letter(g->floor - 1);
    } catch (const InsufficientPrecision&) {
      return std::nullopt;
    }
  }

  void restart_or_escalate(bool escalate) {
    for (;;) {
      if (escalate) {
        bits_ *= 2;
        if (bits_ > digits_to_bits(policy_.max_digits)) {
          throw PrecisionExhausted("digit " + std::to_string(digits_.size() + 1) +
                                       " is undecidable at the precision cap",
                                   policy_.max_digits * 2, digits_.size());
        }
      }
      escalate = true;
      try {
        x_ = x0_.enclose(bits_);
      } catch (const InsufficientPrecision&) {
        continue;
      }
      bool ok = true;
      for (Letter expected : digits_) {
        auto d = advance(x_);
        if (!d) {
          ok = false;
          break;
        }
        if (*d != expected) throw std::logic_error("digit changed under higher precision");
      }
      if (ok) return;
    }
  }

  RealValue x0_;
  RealValue beta_;
  ExpansionKind kind_;
  PrecisionPolicy policy_;
  long bits_;
  Interval x_;
  std::vector<Letter> digits_;
};

}  // namespace

RealValue t_map(const RealValue& x, const BetaNumber& beta, ExpansionKind kind) {
  require_unit_interval(x);
  RealValue y = beta.value() * x;
  GridPoint g = y.grid();
  if (g.exact_hit) return RealValue(kind == ExpansionKind::Bar ? 1L : 0L);
  return y - RealValue(Rational(g.floor));
}

DigitStream expand(const RealValue& x, const BetaNumber& beta, ExpansionKind kind,
                   const PrecisionPolicy& policy) {
  require_unit_interval(x);
  if (x.is_exact() && beta.value().is_exact()) {
    return DigitStream(std::make_unique<ExactOrbitSource>(x, beta.value(), kind));
  }
  return DigitStream(std::make_unique<IntervalOrbitSource>(x, beta.value(), kind, policy));
}

EpWord expand_exact(const RealValue& x, const BetaNumber& beta, ExpansionKind kind,
                    std::size_t max_letters) {
  DigitStream s = expand(x, beta, kind);
  if (auto e = s.resolve_exact(max_letters)) return *e;
  throw CycleCapExceeded("no repeated orbit state within " + std::to_string(max_letters) +
                         " digits");
}

DigitStream bar_of_one(const BetaNumber& beta, const PrecisionPolicy& policy) {
  return expand(RealValue(1L), beta, ExpansionKind::Bar, policy);
}

namespace {

bool is_finite_expansion(const EpWord& w) { return w.period() == FiniteWord{0}; }

FiniteWord decrement_last(FiniteWord w) {
  std::vector<Letter> letters = w.letters();
  if (letters.empty() || letters.back() == 0) throw std::invalid_argument("not a finite expansion");
  --letters.back();
  return FiniteWord(std::move(letters));
}

}  // namespace

DigitStream bar_from_greedy(const EpWord& greedy, const DigitStream& d1) {
  if (!is_finite_expansion(greedy)) return DigitStream::from_word(greedy);
  if (greedy.preperiod().empty()) return DigitStream::from_word(greedy);
  return concat(decrement_last(greedy.preperiod()), d1);
}

EpWord bar_of_one_from_greedy(const EpWord& greedy_of_one) {
  if (!is_finite_expansion(greedy_of_one)) return greedy_of_one;
  return EpWord::periodic(decrement_last(greedy_of_one.preperiod()));
}

bool is_admissible(const EpWord& s, const EpWord& d1) {
  const std::size_t shifts = s.preperiod().size() + s.period().size();
  for (std::size_t n = 0; n < shifts; ++n) {
    if (lex_compare(s.shifted(n), d1) != Ordering::Less) return false;
  }
  return true;
}

std::optional<bool> is_admissible(const EpWord& s, DigitStream d1, std::size_t horizon) {
  if (auto e = d1.exact()) return is_admissible(s, *e);
  const std::size_t shifts = s.preperiod().size() + s.period().size();
  bool undecided = false;
  for (std::size_t n = 0; n < shifts; ++n) {
    const Ordering o = lex_compare(s.shifted(n), d1, horizon);
    if (o == Ordering::Greater || o == Ordering::Equal) return false;
    if (o == Ordering::Undecided) undecided = true;
  }
  if (undecided) return std::nullopt;
  return true;
}

std::optional<bool> is_admissible(DigitStream s, DigitStream d1, std::size_t horizon) {
  if (auto e = s.exact()) return is_admissible(*e, std::move(d1), horizon);
  bool undecided = false;
  for (std::size_t n = 0; n < horizon; ++n) {
    const Ordering o = lex_compare(s.shifted(n), d1, horizon);
    if (o == Ordering::Greater || o == Ordering::Equal) return false;
    if (o == Ordering::Undecided) undecided = true;
  }
  if (undecided) return std::nullopt;
  return true;
}

Rational frequency(const EpWord& w) {
  Integer sum = 0;
  for (Letter a : w.period()) sum += a;
  return make_rational(sum, w.period().size());
}

}  // namespace betaorbit
