#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/mechanical.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/orbit.hpp"
#include "betaorbit/palindromes.hpp"

namespace betaorbit::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }

  SuiteResult result(std::string name, const std::string& extra = "") const {
    std::ostringstream os;
    os << checks << " checks, " << failures << " failures";
    if (!extra.empty()) os << "; " << extra;
    if (failures) os << "; first: " << first;
    return {std::move(name), failures == 0 && checks > 0, os.str()};
  }
};

FiniteWord word_of(const Letters& l) { return FiniteWord(l); }

bool equal(const RealValue& x, const RealValue& y) { return compare(x, y) == Ordering::Equal; }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

SuiteResult freq_table() {
  struct Case {
    const char* beta;
    const char* freq;
    CaseTag tag;
  };
  const Case cases[] = {
      {"quad:(1+1*sqrt(5))/2", "1/2", CaseTag::Mc},
      {"poly:[-1,-1,0,1]@(1.3,1.4)", "1/5", CaseTag::Mc},
      {"pi", "2", CaseTag::Ma},
      {"quad:(0+1*sqrt(7))", "5/4", CaseTag::G1b},
      {"rat:3/2", "1/3", CaseTag::G3b},
  };
  Tally t;
  const auto t0 = Clock::now();
  for (const auto& c : cases) {
    try {
      const BetaNumber beta = BetaNumber::parse(c.beta);
      const FreqResult r = freq_of_beta(beta);
      t.expect(r.frequency == parse_rational(c.freq),
               std::string(c.beta) + " gave " + to_string(r.frequency));
      t.expect(r.orbit && r.orbit->case_tag == c.tag, std::string(c.beta) + " case mismatch");
      if (!beta.value().is_exact()) {
        const Interval e = beta.value().enclose(digits_to_bits(default_precision().start_digits));
        t.expect(e.width() < make_rational(1, Integer("100000000000000000000")),
                 std::string(c.beta) + " enclosure too wide");
      }
    } catch (const std::exception& e) {
      t.expect(false, std::string(c.beta) + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 5.0, "took " + fmt_seconds(secs));
  return t.result("freq-table", fmt_seconds(secs));
}

SuiteResult digit_prefixes() {
  Tally t;
  const std::pair<const char*, const char*> cases[] = {
      {"rat:3/2", "1010000010010"}, {"pi", "3011021110"}, {"quad:(0+1*sqrt(7))", "2112020102"}};
  try {
    for (const auto& [spec, digits] : cases) {
      const FiniteWord want = FiniteWord::parse(digits);
      DigitStream d = bar_of_one(BetaNumber::parse(spec));
      t.expect(d.prefix(want.size()) == want, std::string(spec) + " prefix mismatch");
    }
    const Letters naive = naive_bar_digits(Rational(1), Rational(3, 2), 13);
    t.expect(word_of(naive) == FiniteWord::parse("1010000010010"), "naive digits of 1 at 3/2");
    DigitStream phi = bar_of_one(BetaNumber::parse("quad:(1+1*sqrt(5))/2"));
    const auto e = phi.resolve_exact(64);
    t.expect(e && *e == EpWord::parse("|10"), "golden ratio expansion of 1 is not (10)^omega");
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  return t.result("digit-prefixes");
}

SuiteResult middle_case() {
  Tally t;
  try {
    const Rational beta_q(5, 2);
    const BetaNumber beta{RealValue(beta_q)};
    const EpWord crafted = EpWord::parse("001002|001");
    const Rational tq = naive_eval(crafted, beta_q);
    const RealValue tv(tq);
    const OrbitResult r = locate_orbit(tv, beta);
    t.expect(r.case_tag == CaseTag::G3dAddendum,
             "case " + std::string(to_string(r.case_tag)) + " instead of G.3d-addendum");
    const FiniteWord u = FiniteWord::parse("010");
    t.expect(r.generator == EpWord::periodic(r.b + u + r.a), "generator is not (bua)^omega");
    t.expect(r.frequency == Rational(2, 5), "frequency " + to_string(r.frequency));

    const EpWord as = expand_exact(tv, beta, ExpansionKind::Bar);
    const EpWord bs = as.shifted(1).prepended(r.b);
    const EpWord aub = EpWord::periodic(r.a + u + r.b);
    const EpWord bua = EpWord::periodic(r.b + u + r.a);
    t.expect(lex_compare(as, aub) == Ordering::Less, "a s < (aub)^omega fails");
    t.expect(lex_compare(aub, bua) == Ordering::Less, "(aub)^omega < (bua)^omega fails");
    t.expect(lex_compare(bua, bs) == Ordering::Less, "(bua)^omega < b s fails");
    t.expect(naive_compare(as, aub) < 0 && naive_compare(aub, bua) < 0 && naive_compare(bua, bs) < 0,
             "naive sandwich fails");
    std::size_t strict = 0;
    for (const auto& c : r.certificate) strict += c.relation == "<";
    t.expect(strict >= 3, "certificate lacks the strict sandwich");

    const Rational x0 = naive_eval(r.generator, beta_q);
    const OrbitTrace tr = simulate_orbit(RealValue(x0), beta, r.generator.period().size() + 2);
    t.expect(tr.cycle_closed, "generator orbit did not close");
    t.expect(orbit_within(tr, tv, RealValue(Rational(tq + 1 / beta_q))), "orbit leaves [t, t + 1/beta]");
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  return t.result("middle-case");
}

// The located generator's orbit stays in [t, t + 1/beta].
bool check_containment(const Rational& beta_q, const Rational& tq, const OrbitResult& r,
                       std::string& why) {
  const BetaNumber beta{RealValue(beta_q)};
  Integer sum = 0;
  for (Letter c : r.generator.period()) sum += c;
  if (r.frequency != make_rational(sum, r.generator.period().size())) {
    why = "frequency disagrees with generator";
    return false;
  }
  const Rational x0 = naive_eval(r.generator, beta_q);
  if (sgn(x0) < 0 || x0 > 1) {
    why = "generator value outside [0, 1]";
    return false;
  }
  const OrbitTrace tr = simulate_orbit(RealValue(x0), beta, r.generator.period().size() + 2);
  if (!tr.cycle_closed) {
    why = "orbit of generator did not close";
    return false;
  }
  if (!orbit_within(tr, RealValue(tq), RealValue(Rational(tq + 1 / beta_q)))) {
    why = "orbit leaves the interval";
    return false;
  }
  return true;
}

SuiteResult containment() {
  Tally t;
  std::mt19937_64 rng(0x5eed2024);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto t0 = Clock::now();
  std::map<std::string, int> tags;
  for (int i = 0; i < 200; ++i) {
    const long d = uniform(1, 9);
    const Rational beta_q = make_rational(uniform(d + 1, 4 * d - 1), d);
    const long m = uniform(1, 60);
    const Rational tq = (Rational(1) - 1 / beta_q) * make_rational(uniform(0, m), m);
    const std::string label = "beta=" + to_string(beta_q) + " t=" + to_string(tq);
    try {
      const BetaNumber beta{RealValue(beta_q)};
      std::optional<OrbitResult> r;
      try {
        r = locate_orbit(RealValue(tq), beta);
      } catch (const Undetermined&) {
        r = locate_orbit(RealValue(tq), beta, 4096);
      }
      ++tags[std::string(to_string(r->case_tag))];
      std::string why;
      t.expect(check_containment(beta_q, tq, *r, why), label + ": " + why);
    } catch (const std::exception& e) {
      t.expect(false, label + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 60.0, "took " + fmt_seconds(secs));
  std::string mix;
  for (const auto& [k, v] : tags) mix += (mix.empty() ? "" : " ") + k + "x" + std::to_string(v);
  return t.result("containment", fmt_seconds(secs) + ", cases " + mix);
}

SuiteResult uniqueness() {
  Tally t;
  std::size_t located = 0, fitted = 0;
  for (const Rational& beta_q : {Rational(3, 2), Rational(5, 3), Rational(7, 4)}) {
    const BetaNumber beta{RealValue(beta_q)};
    struct Span {
      Rational lo, hi;
    };
    std::map<Letters, Span> classes;
    try {
      for (const auto& w : enumerate_admissible_epwords(beta_q, 0, 5)) {
        const Letters key = rotation_class(w.period().letters());
        if (classes.count(key)) continue;
        const OrbitTrace tr =
            simulate_orbit(RealValue(naive_eval(w, beta_q)), beta, w.period().size() + 2);
        t.expect(tr.cycle_closed, "periodic orbit of " + w.to_string() + " did not close");
        classes[key] = {*tr.min().rational(), *tr.max().rational()};
      }
    } catch (const std::exception& e) {
      t.expect(false, e.what());
      continue;
    }
    const Rational top = Rational(1) - 1 / beta_q;
    for (int i = 0; i < 100; ++i) {
      const Rational tq = top * make_rational(i, 99);
      const std::string label = "beta=" + to_string(beta_q) + " t=" + to_string(tq);
      std::vector<Letters> fits;
      for (const auto& [key, span] : classes) {
        if (span.lo >= tq && span.hi <= tq + 1 / beta_q) fits.push_back(key);
      }
      t.expect(fits.size() <= 1, label + ": two periodic orbit closures fit");
      fitted += fits.size();
      try {
        const OrbitResult r = locate_orbit(RealValue(tq), beta);
        ++located;
        const Letters gen = rotation_class(r.generator.period().letters());
        if (fits.size() == 1) {
          t.expect(gen == fits.front(), label + ": locate_orbit disagrees with brute force");
        } else {
          t.expect(!classes.count(gen), label + ": located class does not fit its interval");
        }
      } catch (const Undetermined&) {
      } catch (const std::exception& e) {
        t.expect(false, label + ": " + e.what());
      }
    }
  }
  return t.result("uniqueness", std::to_string(located) + " located, " + std::to_string(fitted) +
                                    " grid points with a fitting short orbit");
}

std::vector<Rational> stern_brocot(std::size_t count, const Rational& below) {
  struct Node {
    Integer ln, ld, rn, rd;
  };
  std::vector<Rational> out;
  std::vector<Node> level{{0, 1, 1, 0}};
  while (out.size() < count) {
    std::vector<Node> next;
    for (const auto& n : level) {
      const Integer mn = n.ln + n.rn, md = n.ld + n.rd;
      const Rational m = make_rational(mn, md);
      if (m < below) {
        if (out.size() < count) out.push_back(m);
        next.push_back({n.ln, n.ld, mn, md});
      }
      next.push_back({mn, md, n.rn, n.rd});
    }
    level = std::move(next);
  }
  return out;
}

SuiteResult staircase() {
  Tally t;
  try {
    std::vector<Rational> sample = stern_brocot(30, Rational(2));
    std::sort(sample.begin(), sample.end());
    std::optional<RealValue> prev;
    for (const auto& alpha : sample) {
      const RealValue d = delta(alpha);
      const FreqResult f = freq_of_beta(BetaNumber(d));
      t.expect(f.frequency == alpha,
               "Freq(Delta(" + to_string(alpha) + ")) = " + to_string(f.frequency));
      if (prev) {
        t.expect(compare(*prev, d) != Ordering::Greater, "Delta decreases at " + to_string(alpha));
      }
      prev = d;
    }
    const RealValue phi = parse_real("quad:(1+1*sqrt(5))/2");
    const Interval diff = (delta(Rational(1, 2)) - phi).enclose(128);
    const Rational tol(1, 1000000000000L);
    t.expect(diff.lo() > -tol && diff.hi() < tol, "Delta(1/2) differs from the golden ratio");
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  return t.result("staircase");
}

SuiteResult diam_formulas() {
  Tally t;
  std::size_t mech = 0, skew = 0;
  for (long bi : {2L, 3L}) {
    const Rational beta_q(bi);
    const BetaNumber beta{RealValue(beta_q)};
    for (long q = 1; q <= 6; ++q) {
      for (long p = 1; p <= (bi - 1) * q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const std::string label =
            "beta=" + std::to_string(bi) + " slope=" + std::to_string(p) + "/" + std::to_string(q);
        try {
          const EpWord w = mechanical_word(p, q, true);
          const RealValue xi_val = eval_word(w, beta);
          const Rational closed = rational_xi_reconstruct(w, bi);
          const RealValue formula = diam_formula(beta, static_cast<std::size_t>(q));
          t.expect(equal(xi_val, closed), label + ": closed form differs from eval_word");
          t.expect(naive_eval(w, beta_q) == closed, label + ": closed form differs from oracle");
          t.expect(word_of(naive_bar_digits(closed, beta_q, 3 * q)) == w.prefix(3 * q),
                   label + ": expansion of xi is not the mechanical word");
          const OrbitTrace tr = simulate_orbit(xi_val, beta, q + 2);
          t.expect(tr.cycle_closed && equal(tr.diameter(), formula), label + ": diameter");
          const DiamReport rep = diam_classify(xi_val, beta);
          const auto* m = std::get_if<diam::Mechanical>(&rep);
          t.expect(m && m->slope == Rational(p, q) && equal(m->value, formula),
                   label + ": diam_classify gave " + describe(rep));
          ++mech;

          const FiniteWord per = w.period();
          for (std::size_t k = 0; k < per.size(); ++k) {
            for (Letter c = 0; c < static_cast<Letter>(bi); ++c) {
              const EpWord cand(FiniteWord{c}, per.rotated_left(k));
              if (cand.preperiod().empty()) continue;
              const Classification cls = classify_balanced(cand);
              if (!std::holds_alternative<verdict::Skew>(cls)) continue;
              const Rational xq = naive_eval(cand, beta_q);
              const std::size_t m_len = cand.preperiod().size();
              if (xq > 1 || word_of(naive_bar_digits(xq, beta_q, m_len + 3 * q)) !=
                                cand.prefix(m_len + 3 * q)) {
                continue;
              }
              const std::string sl = label + " skew " + cand.to_string();
              t.expect(rational_xi_reconstruct(cand, bi) == xq, sl + ": closed form");
              const OrbitTrace st = simulate_orbit(RealValue(xq), beta, m_len + q + 2);
              t.expect(st.cycle_closed && equal(st.diameter(m_len), formula), sl + ": diameter");
              const DiamReport sr = diam_classify(RealValue(xq), beta);
              const auto* s = std::get_if<diam::Skew>(&sr);
              t.expect(s && s->stable_after == m_len && equal(s->value, formula),
                       sl + ": diam_classify gave " + describe(sr));
              ++skew;
            }
          }
        } catch (const std::exception& e) {
          t.expect(false, label + ": " + e.what());
        }
      }
    }
  }
  t.expect(skew > 0, "no skew instances were realized");
  return t.result("diam", std::to_string(mech) + " mechanical, " + std::to_string(skew) + " skew");
}

Letters concat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool prefix_of_power(const Letters& w, const Letters& period) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != period[i % period.size()]) return false;
  }
  return true;
}

SuiteResult words() {
  Tally t;
  try {
    std::map<std::size_t, std::set<Letters>> central;
    for (std::size_t n = 0; n <= 14; ++n) central[n] = naive_central_words(n);

    for (std::size_t len = 0; len <= 10; ++len) {
      for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
        Letters v(len);
        for (std::size_t i = 0; i < len; ++i) v[i] = (mask >> i) & 1;
        const FiniteWord w = pal(word_of(v));
        t.expect(w.letters() == naive_pal(v), "pal disagrees with the oracle on " + word_of(v).to_string());
        t.expect(is_central(w), "pal image not central: " + w.to_string());
        t.expect(directive_word(w).letters() == v, "directive round trip fails on " + word_of(v).to_string());
      }
    }

    for (std::size_t n = 0; n <= 12; ++n) {
      for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        Letters w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1;
        t.expect(is_central(word_of(w)) == (central[n].count(w) > 0),
                 "is_central disagrees on " + word_of(w).to_string());
        const Letters closure = naive_closure(w);
        t.expect(palindromic_closure(word_of(w)).letters() == closure,
                 "closure disagrees on " + word_of(w).to_string());
        t.expect(palindromic_closure(word_of(closure)).letters() == closure, "closure not idempotent");
      }
    }

    const Letters ab{0, 1}, ba{1, 0};
    for (std::size_t n = 2; n <= 14; ++n) {
      for (const auto& w : central[n]) {
        if (std::set<Letter>(w.begin(), w.end()).size() < 2) continue;
        const std::string label = word_of(w).to_string();
        const CentralDecomp d = central_decompose(word_of(w));
        const Letters& p = d.p.letters();
        const Letters& q = d.q.letters();
        t.expect(naive_palindrome(p) && naive_palindrome(q), label + ": p or q not a palindrome");
        t.expect(concat({p, ab, q}) == w && concat({q, ba, p}) == w, label + ": w != pabq = qbap");
        t.expect(prefix_of_power(concat({w, ab, q}), concat({q, ba})), label + ": w ab q");
        t.expect(prefix_of_power(concat({w, ba, p}), concat({p, ab})), label + ": w ba p");
        const std::size_t pp = p.size() + 2, qq = q.size() + 2;
        bool periodic = true;
        for (std::size_t i = 0; i + pp < w.size(); ++i) periodic &= w[i] == w[i + pp];
        for (std::size_t i = 0; i + qq < w.size(); ++i) periodic &= w[i] == w[i + qq];
        t.expect(periodic, label + ": periods |p|+2, |q|+2 fail");
        t.expect(std::gcd(pp, qq) == 1, label + ": periods not coprime");
      }
    }

    std::set<std::string> seen;
    for (std::size_t total = 1; total <= 8; ++total) {
      for (std::size_t per = 1; per <= total; ++per) {
        const std::size_t pre = total - per;
        for (unsigned long mask = 0; mask < (1UL << total); ++mask) {
          Letters l(total);
          for (std::size_t i = 0; i < total; ++i) l[i] = (mask >> i) & 1;
          const EpWord w(word_of(Letters(l.begin(), l.begin() + static_cast<long>(pre))),
                         word_of(Letters(l.begin() + static_cast<long>(pre), l.end())));
          if (!seen.insert(w.to_string()).second) continue;
          const BalanceResult b = is_balanced(w);
          const bool naive = naive_balanced(w, 40);
          t.expect(b.balanced == naive, "balance disagrees on " + w.to_string());
          if (!b.balanced && b.witness) {
            const Letters& u = b.witness->letters();
            const auto f = naive_factors(w, u.size() + 2);
            t.expect(naive_palindrome(u) && f.count(concat({{0}, u, {0}})) &&
                         f.count(concat({{1}, u, {1}})),
                     "bad witness for " + w.to_string());
          }
        }
      }
    }

    std::mt19937_64 rng(7);
    for (long q = 2; q <= 8; ++q) {
      for (long p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Rational alpha(p, q);
        const std::size_t n = static_cast<std::size_t>(5 * q);
        auto naive_mech = [&](const Rational& rho, bool upper) {
          Letters out;
          auto at = [&](long k) {
            const Rational v = alpha * k + rho;
            return upper ? ceil_of(v) : floor_of(v);
          };
          for (long k = 0; k < static_cast<long>(n); ++k) out.push_back(static_cast<Letter>(Integer(at(k + 1) - at(k)).get_ui()));
          return out;
        };
        const Letters s0 = naive_mech(0, false), s0u = naive_mech(0, true);
        for (int i = 0; i < 20; ++i) {
          const long den = std::uniform_int_distribution<long>(2, 97)(rng);
          const Rational rho = make_rational(std::uniform_int_distribution<long>(1, den - 1)(rng), den);
          const Letters lo = mechanical_prefix(MechSpec{alpha, rho, false}, n).letters();
          const Letters hi = mechanical_prefix(MechSpec{alpha, rho, true}, n).letters();
          const std::string label = "slope " + to_string(alpha) + " rho " + to_string(rho);
          t.expect(lo == naive_mech(rho, false) && hi == naive_mech(rho, true), label + ": prefix");
          t.expect(naive_compare(s0, std::min(lo, hi)) <= 0 && naive_compare(std::max(lo, hi), s0u) <= 0,
                   label + ": outer order bounds fail");
          const bool lattice = Rational(rho * q).get_den() == 1;
          if (!lattice) t.expect(naive_compare(lo, hi) <= 0, label + ": order sandwich fails");
          else t.expect(naive_compare(hi, lo) <= 0, label + ": lattice intercept does not swap");
        }
      }
    }
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  return t.result("words");
}

SuiteResult honest_failure() {
  Tally t;
  try {
    const BetaNumber beta = BetaNumber::parse(kSturmianLikeBeta);
    try {
      const FreqResult r = freq_of_beta(beta, 64);
      t.expect(false, "returned an exact frequency " + to_string(r.frequency));
    } catch (const Undetermined& u) {
      const Rational width = u.hi() - u.lo();
      t.expect(width <= Rational(1, 8), "enclosure width " + to_string(width));
      return t.result("honest-failure",
                      "enclosure [" + to_string(u.lo()) + ", " + to_string(u.hi()) + "]");
    }
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  return t.result("honest-failure");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"freq-table", "digit-prefixes", "middle-case", "containment", "uniqueness",
          "staircase",  "diam",           "words",    "honest-failure"};
}

SuiteResult run_suite(const std::string& name) {
  if (name == "freq-table") return freq_table();
  if (name == "digit-prefixes") return digit_prefixes();
  if (name == "middle-case") return middle_case();
  if (name == "containment") return containment();
  if (name == "uniqueness") return uniqueness();
  if (name == "staircase") return staircase();
  if (name == "diam") return diam_formulas();
  if (name == "words") return words();
  if (name == "honest-failure") return honest_failure();
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace betaorbit::oracle
