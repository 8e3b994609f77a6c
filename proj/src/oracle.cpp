#include "betaorbit/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "betaorbit/errors.hpp"

namespace betaorbit::oracle {

namespace {

RealValue tbar_exact(const RealValue& x, const RealValue& beta) {
  if (x.sign() == 0) return RealValue(0L);
  RealValue y = beta * x;
  GridPoint g = compare_to_integer_grid(y);
  if (g.exact_hit) return RealValue(1L);
  return y - RealValue(Rational(g.floor));
}

std::optional<Interval> tbar_interval(const Interval& x, const Interval& beta, long bits) {
  if (x.is_point() && sgn(x.lo()) == 0) return x;
  Interval y = beta * x;
  auto g = y.grid();
  if (!g) return std::nullopt;
  if (g->exact_hit) return Interval(Rational(1));
  Interval next = y - Interval(Rational(g->floor));
  return next.is_point() ? next : next.rounded(bits);
}

Rational rpow_neg(const Rational& beta, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) r /= beta;
  return r;
}

}  // namespace

RealValue OrbitTrace::min(std::size_t from) const {
  if (!exact || from >= points.size()) throw std::logic_error("no exact iterates");
  RealValue best = points[from];
  for (std::size_t i = from + 1; i < points.size(); ++i) {
    if (compare(points[i], best) == Ordering::Less) best = points[i];
  }
  return best;
}

RealValue OrbitTrace::max(std::size_t from) const {
  if (!exact || from >= points.size()) throw std::logic_error("no exact iterates");
  RealValue best = points[from];
  for (std::size_t i = from + 1; i < points.size(); ++i) {
    if (compare(points[i], best) == Ordering::Greater) best = points[i];
  }
  return best;
}

RealValue OrbitTrace::diameter(std::size_t from) const { return max(from) - min(from); }

Interval OrbitTrace::diameter_enclosure(std::size_t from) const {
  if (exact) return diameter(from).enclose(256);
  if (from >= enclosures.size()) throw std::logic_error("no iterates");
  Rational min_lo = enclosures[from].lo(), min_hi = enclosures[from].hi();
  Rational max_lo = min_lo, max_hi = min_hi;
  for (std::size_t i = from + 1; i < enclosures.size(); ++i) {
    const Interval& e = enclosures[i];
    min_lo = std::min(min_lo, e.lo());
    min_hi = std::min(min_hi, e.hi());
    max_lo = std::max(max_lo, e.lo());
    max_hi = std::max(max_hi, e.hi());
  }
  return Interval(std::max(Rational(max_lo - min_hi), Rational(0)), max_hi - min_lo);
}

OrbitTrace simulate_orbit(const RealValue& x0, const BetaNumber& beta, std::size_t steps) {
  if (x0.sign() < 0 || compare(x0, RealValue(1L)) == Ordering::Greater) {
    throw DomainError("orbit start must lie in [0, 1]");
  }
  OrbitTrace out;
  if (x0.is_exact() && beta.value().is_exact()) {
    std::map<std::string, std::size_t> seen;
    RealValue x = x0;
    out.points.push_back(x);
    seen.emplace(x.key(), 0);
    for (std::size_t i = 1; i <= steps; ++i) {
      x = tbar_exact(x, beta.value());
      auto [it, inserted] = seen.emplace(x.key(), out.points.size());
      if (!inserted) {
        out.cycle_closed = true;
        out.cycle_start = it->second;
        break;
      }
      out.points.push_back(x);
    }
    return out;
  }
  out.exact = false;
  const PrecisionPolicy policy = default_precision();
  const long cap = digits_to_bits(policy.max_digits);
  for (long bits = std::max<long>(digits_to_bits(policy.start_digits),
                                  4 * static_cast<long>(steps) + 128);
       bits <= cap; bits *= 2) {
    std::vector<Interval> encl;
    try {
      const Interval b = beta.value().enclose(bits);
      Interval x = x0.enclose(bits);
      encl.push_back(x);
      bool ok = true;
      for (std::size_t i = 1; i <= steps; ++i) {
        auto next = tbar_interval(x, b, bits);
        if (!next) {
          ok = false;
          break;
        }
        x = *next;
        encl.push_back(x);
      }
      if (!ok) continue;
    } catch (const InsufficientPrecision&) {
      continue;
    }
    out.enclosures = std::move(encl);
    return out;
  }
  throw PrecisionExhausted("orbit simulation needs more precision", policy.max_digits * 2);
}

bool orbit_within(const OrbitTrace& trace, const RealValue& lo, const RealValue& hi) {
  if (!trace.exact) throw std::logic_error("orbit_within needs exact iterates");
  for (const auto& x : trace.points) {
    if (compare(x, lo) == Ordering::Less || compare(x, hi) == Ordering::Greater) return false;
  }
  return true;
}

Letters letters_of(const EpWord& w, std::size_t n) {
  Letters out;
  out.reserve(n);
  const auto& pre = w.preperiod().letters();
  const auto& per = w.period().letters();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()]);
  }
  return out;
}

Letters naive_bar_digits(Rational x, const Rational& beta, std::size_t n) {
  Letters out;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x) == 0) {
      out.push_back(0);
      continue;
    }
    Rational y = beta * x;
    Integer f = floor_of(y);
    if (y == Rational(f)) {
      out.push_back(static_cast<Letter>(f.get_ui() - 1));
      x = 1;
    } else {
      out.push_back(static_cast<Letter>(f.get_ui()));
      x = y - f;
    }
  }
  return out;
}

std::vector<EpWord> enumerate_admissible_epwords(const Rational& beta, std::size_t max_pre,
                                                 std::size_t max_per, std::size_t horizon) {
  const Letter k = static_cast<Letter>(ceil_of(beta).get_ui());
  const Letters d1 = naive_bar_digits(Rational(1), beta, horizon);
  std::map<std::string, EpWord> found;
  for (std::size_t m = 0; m <= max_pre; ++m) {
    for (std::size_t q = 1; q <= max_per; ++q) {
      Letters digits(m + q, 0);
      for (;;) {
        EpWord w(FiniteWord(Letters(digits.begin(), digits.begin() + static_cast<long>(m))),
                 FiniteWord(Letters(digits.begin() + static_cast<long>(m), digits.end())));
        const std::string key = w.to_string();
        if (!found.count(key)) {
          const std::size_t shifts = w.preperiod().size() + w.period().size();
          const Letters all = letters_of(w, shifts + horizon);
          bool ok = true;
          for (std::size_t n = 0; n < shifts && ok; ++n) {
            const Letters tail(all.begin() + static_cast<long>(n),
                               all.begin() + static_cast<long>(n + horizon));
            ok = naive_compare(tail, d1) < 0;
          }
          if (ok) found.emplace(key, w);
        }
        std::size_t i = digits.size();
        while (i > 0 && digits[i - 1] == k - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
    }
  }
  std::vector<EpWord> out;
  for (auto& [key, w] : found) out.push_back(w);
  return out;
}

Rational frequency_estimate(DigitStream stream, std::size_t n) {
  if (n == 0) throw std::invalid_argument("frequency_estimate needs n >= 1");
  Integer sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += stream.at(i);
  return make_rational(sum, n);
}

Rational naive_eval(const EpWord& w, const Rational& beta) {
  const auto& pre = w.preperiod().letters();
  const auto& per = w.period().letters();
  Rational head = 0;
  for (std::size_t i = 0; i < pre.size(); ++i) head += Rational(pre[i]) * rpow_neg(beta, i + 1);
  Rational cycle = 0;
  for (std::size_t j = 0; j < per.size(); ++j) cycle += Rational(per[j]) * rpow_neg(beta, j + 1);
  const Rational scale = rpow_neg(beta, pre.size()) / (Rational(1) - rpow_neg(beta, per.size()));
  return head + cycle * scale;
}

int naive_compare(const Letters& u, const Letters& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

int naive_compare(const EpWord& u, const EpWord& v) {
  const std::size_t n = std::max(u.preperiod().size(), v.preperiod().size()) +
                        u.period().size() * v.period().size() + 1;
  return naive_compare(letters_of(u, n), letters_of(v, n));
}

std::set<Letters> naive_factors(const EpWord& w, std::size_t n) {
  const std::size_t len = w.preperiod().size() + w.period().size() * (n + 2) + n;
  const Letters all = letters_of(w, len);
  std::set<Letters> out;
  for (std::size_t i = 0; i + n <= all.size(); ++i) {
    out.emplace(all.begin() + static_cast<long>(i), all.begin() + static_cast<long>(i + n));
  }
  return out;
}

bool naive_balanced(const EpWord& w, std::size_t max_len) {
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::optional<unsigned long> lo, hi;
    for (const auto& f : naive_factors(w, n)) {
      unsigned long s = 0;
      for (Letter c : f) s += c;
      lo = lo ? std::min(*lo, s) : s;
      hi = hi ? std::max(*hi, s) : s;
    }
    if (*hi > *lo + 1) return false;
  }
  return true;
}

bool naive_palindrome(const Letters& w) {
  for (std::size_t i = 0, j = w.size(); i < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

Letters naive_closure(const Letters& w) {
  for (std::size_t k = 0;; ++k) {
    Letters cand = w;
    for (std::size_t i = k; i > 0; --i) cand.push_back(w[i - 1]);
    if (naive_palindrome(cand)) return cand;
  }
}

Letters naive_pal(const Letters& directive) {
  Letters w;
  for (Letter z : directive) {
    w.push_back(z);
    w = naive_closure(w);
  }
  return w;
}

std::set<Letters> naive_central_words(std::size_t n, Letter a, Letter b) {
  std::set<Letters> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
      Letters v(len);
      for (std::size_t i = 0; i < len; ++i) v[i] = (mask >> i) & 1 ? b : a;
      Letters w = naive_pal(v);
      if (w.size() == n) out.insert(std::move(w));
    }
  }
  out.insert(Letters(n, a));
  out.insert(Letters(n, b));
  return out;
}

bool naive_is_central(const Letters& w) {
  std::set<Letter> letters(w.begin(), w.end());
  if (letters.size() <= 1) return true;
  if (letters.size() > 2) return false;
  return naive_central_words(w.size(), *letters.begin(), *letters.rbegin()).count(w) > 0;
}

Letters rotation_class(const Letters& period) {
  Letters best = period;
  for (std::size_t k = 1; k < period.size(); ++k) {
    Letters r(period.begin() + static_cast<long>(k), period.end());
    r.insert(r.end(), period.begin(), period.begin() + static_cast<long>(k));
    best = std::min(best, r);
  }
  return best;
}

}  // namespace betaorbit::oracle
