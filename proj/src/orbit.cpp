#include "betaorbit/orbit.hpp"

#include <algorithm>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/palindromes.hpp"

namespace betaorbit {

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Ma: return "M.a";
    case CaseTag::Mb: return "M.b";
    case CaseTag::Mc: return "M.c";
    case CaseTag::G1a: return "G.1a";
    case CaseTag::G1b: return "G.1b";
    case CaseTag::G1c: return "G.1c";
    case CaseTag::G2a: return "G.2a";
    case CaseTag::G2b: return "G.2b";
    case CaseTag::G2c: return "G.2c";
    case CaseTag::G3a: return "G.3a";
    case CaseTag::G3b: return "G.3b";
    case CaseTag::G3c: return "G.3c";
    case CaseTag::G3dAddendum: return "G.3d-addendum";
  }
  return "?";
}

namespace {

std::string show(const FiniteWord& w) { return w.empty() ? std::string("ε") : w.to_string(); }

std::string relation(Ordering o) {
  switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
    case Ordering::Undecided: return "?";
  }
  return "?";
}

[[noreturn]] void equality_reached(const std::string& what) {
  throw std::logic_error("equality in the case analysis (" + what +
                         "); the central prefix was not the longest");
}

// a + (|w|_b + 1) / (|w| + 2), the frequency of (b w a)^omega.
Rational christoffel_frequency(const FiniteWord& w, Letter a, Letter b) {
  return Rational(a) + make_rational(w.count(b) + 1, w.size() + 2);
}

FiniteWord min_rotation(const FiniteWord& w) {
  FiniteWord best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    FiniteWord r = w.rotated_left(k);
    if (compare_blocks(r, best) == Ordering::Less) best = r;
  }
  return best;
}

FiniteWord max_rotation(const FiniteWord& w) {
  FiniteWord best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    FiniteWord r = w.rotated_left(k);
    if (compare_blocks(r, best) == Ordering::Greater) best = r;
  }
  return best;
}

void add_sandwich(OrbitResult& r, DigitStream s, std::size_t horizon) {
  const EpWord lo = EpWord::periodic(min_rotation(r.generator.period()));
  const EpWord hi = EpWord::periodic(max_rotation(r.generator.period()));
  DigitStream as = concat(FiniteWord{r.a}, s);
  DigitStream bs = concat(FiniteWord{r.b}, s);
  const std::size_t shown = std::min<std::size_t>(horizon, 2 * r.generator.period().size() + 16);
  const std::string as_text = "a·s=" + as.prefix(shown).to_string() + "...";
  const std::string bs_text = "b·s=" + bs.prefix(shown).to_string() + "...";
  r.certificate.push_back({as_text, relation(lex_compare(as, lo, horizon)), lo.to_string()});
  r.certificate.push_back({lo.to_string(), relation(lex_compare(lo, hi)), hi.to_string()});
  r.certificate.push_back({hi.to_string(), relation(lex_compare(hi, bs, horizon)), bs_text});
}

OrbitResult make_result(CaseTag tag, const FiniteWord& period, Rational freq, Letter a, Letter b,
                        std::vector<CertificateEntry> cert) {
  OrbitResult r{EpWord::periodic(period), std::move(freq), tag, a, b, std::move(cert)};
  if (frequency(r.generator) != r.frequency) {
    throw std::logic_error("frequency does not match the generator");
  }
  return r;
}

// The generic cases, read off the longest central prefix u of s over {a, b}.
OrbitResult generic_case(Letter a, DigitStream s, const FiniteWord& u,
                         std::vector<CertificateEntry> cert) {
  const Letter b = a + 1;
  if (u.empty()) {
    throw HypothesisViolation("s starts with " + std::to_string(s.at(0)) + ", outside {" +
                              std::to_string(a) + "," + std::to_string(b) + "}");
  }
  cert.push_back({"u", "=", show(u)});
  const auto letters = u.alphabet();
  const std::size_t k = u.size();

  if (letters.size() == 1 && letters[0] == a) {
    const FiniteWord v = s.prefix(2 * k + 1).substr(k);
    const FiniteWord ak1 = FiniteWord::repeat(a, k + 1);
    const FiniteWord bak = b + FiniteWord::repeat(a, k);
    const Ordering o1 = compare_blocks(v, ak1);
    cert.push_back({"v=" + show(v), relation(o1), show(ak1)});
    if (o1 == Ordering::Equal) equality_reached("v = a^(k+1)");
    if (o1 == Ordering::Less) {
      return make_result(CaseTag::G1a, FiniteWord{a}, Rational(a), a, b, std::move(cert));
    }
    const Ordering o2 = compare_blocks(v, bak);
    cert.push_back({"v=" + show(v), relation(o2), show(bak)});
    if (o2 == Ordering::Equal) equality_reached("v = b a^k");
    if (o2 == Ordering::Less) {
      return make_result(CaseTag::G1b, b + FiniteWord::repeat(a, k + 1),
                         Rational(a) + make_rational(1, k + 2), a, b, std::move(cert));
    }
    return make_result(CaseTag::G1c, bak, Rational(a) + make_rational(1, k + 1), a, b,
                       std::move(cert));
  }

  if (letters.size() == 1 && letters[0] == b) {
    const FiniteWord v = s.prefix(2 * k + 1).substr(k);
    const FiniteWord bk1 = FiniteWord::repeat(b, k + 1);
    const FiniteWord abk = a + FiniteWord::repeat(b, k);
    const Ordering o1 = compare_blocks(v, bk1);
    cert.push_back({"v=" + show(v), relation(o1), show(bk1)});
    if (o1 == Ordering::Equal) equality_reached("v = b^(k+1)");
    if (o1 == Ordering::Greater) {
      return make_result(CaseTag::G2a, FiniteWord{b}, Rational(b), a, b, std::move(cert));
    }
    const Ordering o2 = compare_blocks(v, abk);
    cert.push_back({"v=" + show(v), relation(o2), show(abk)});
    if (o2 == Ordering::Equal) equality_reached("v = a b^k");
    if (o2 == Ordering::Greater) {
      return make_result(CaseTag::G2b, FiniteWord::repeat(b, k + 1) + a,
                         Rational(b) - make_rational(1, k + 2), a, b, std::move(cert));
    }
    return make_result(CaseTag::G2c, FiniteWord::repeat(b, k) + a,
                       Rational(b) - make_rational(1, k + 1), a, b, std::move(cert));
  }

  const CentralDecomp dec = central_decompose(u);
  if (dec.a != a || dec.b != b) throw std::logic_error("central prefix over the wrong letters");
  const FiniteWord& p = dec.p;
  const FiniteWord& q = dec.q;
  cert.push_back({"p", "=", show(p)});
  cert.push_back({"q", "=", show(q)});
  const FiniteWord window = s.prefix(2 * k + 4);
  const FiniteWord xy = window.substr(k, 2);
  const FiniteWord v = window.substr(k + 2);
  const FiniteWord ab{a, b}, ba{b, a}, aa{a, a}, bb{b, b};
  cert.push_back({"xy", "=", show(xy)});

  auto bwa = [&](const FiniteWord& w) { return b + w + a; };
  auto result = [&](CaseTag tag, const FiniteWord& w) {
    return make_result(tag, bwa(w), christoffel_frequency(w, a, b), a, b, cert);
  };

  if (xy == ab) {
    const FiniteWord uab = u + ab;
    const Ordering o = compare_blocks(v, uab);
    cert.push_back({"v=" + show(v), relation(o), show(uab)});
    if (o == Ordering::Equal) equality_reached("v = uab");
    return o == Ordering::Greater ? result(CaseTag::G3a, u) : result(CaseTag::G3b, q);
  }
  if (xy == ba) {
    const FiniteWord uba = u + ba;
    const Ordering o = compare_blocks(v, uba);
    cert.push_back({"v=" + show(v), relation(o), show(uba)});
    if (o == Ordering::Equal) equality_reached("v = uba");
    return o == Ordering::Less ? result(CaseTag::G3a, u) : result(CaseTag::G3c, p);
  }
  if (compare_blocks(xy, aa) != Ordering::Greater) {
    cert.push_back({"xy", "<=", show(aa)});
    return result(CaseTag::G3b, q);
  }
  if (compare_blocks(xy, bb) != Ordering::Less) {
    cert.push_back({"xy", ">=", show(bb)});
    return result(CaseTag::G3c, p);
  }
  if (compare_blocks(ab, xy) == Ordering::Less && compare_blocks(xy, ba) == Ordering::Less) {
    cert.push_back({show(ab), "<", "xy"});
    cert.push_back({"xy", "<", show(ba)});
    return result(CaseTag::G3dAddendum, u);
  }
  throw std::logic_error("no case of the generic analysis applies to xy=" + show(xy));
}

Rational prefix_sum(Letter head, DigitStream s, std::size_t n) {
  Integer sum = head;
  for (std::size_t i = 0; i + 1 < n; ++i) sum += s.at(i);
  return Rational(sum);
}

[[noreturn]] void undetermined(Letter a, DigitStream s, std::size_t max_depth) {
  const Letter b = a + 1;
  const CentralPrefix lcp = longest_central_prefix(s, a, b, max_depth);
  const FiniteWord& u = lcp.u;
  std::vector<Rational> cands;
  const auto letters = u.alphabet();
  if (u.empty()) {
    cands = {Rational(a), Rational(b)};
  } else if (letters.size() == 1 && letters[0] == a) {
    cands = {Rational(a), Rational(a) + make_rational(1, u.size() + 1)};
  } else if (letters.size() == 1) {
    cands = {Rational(b) - make_rational(1, u.size() + 1), Rational(b)};
  } else {
    const CentralDecomp dec = central_decompose(u);
    cands = {christoffel_frequency(u, a, b), christoffel_frequency(dec.p, a, b),
             christoffel_frequency(dec.q, a, b)};
  }
  const std::size_t n = std::max<std::size_t>(max_depth, 1);
  const Rational nn(static_cast<unsigned long>(n));
  const Rational sa = prefix_sum(a, s, n);
  const Rational sb = prefix_sum(b, s, n);
  cands.push_back(sa / nn);
  cands.push_back((sa + 1) / nn);
  cands.push_back((sb - 1) / nn);
  cands.push_back(sb / nn);
  const Rational lo = *std::min_element(cands.begin(), cands.end());
  const Rational hi = *std::max_element(cands.begin(), cands.end());
  throw Undetermined("central prefix " + show(u).substr(0, 40) +
                         (u.size() > 40 ? "..." : "") + " (length " + std::to_string(u.size()) +
                         ") may extend past depth " + std::to_string(max_depth),
                     lo, hi);
}

OrbitResult meagre(CaseTag tag, Letter a, Letter b, const std::string& rel, DigitStream s,
                   std::size_t horizon) {
  const Letter c = tag == CaseTag::Ma ? a : b;
  OrbitResult r = make_result(tag, FiniteWord{c}, Rational(c), a, b,
                              {{"s", rel, EpWord::constant(c).to_string()}});
  add_sandwich(r, std::move(s), horizon);
  return r;
}

OrbitResult exact_dispatch(Letter a, const EpWord& e, std::size_t max_depth) {
  const Letter b = a + 1;
  DigitStream s = DigitStream::from_word(e);
  const std::size_t horizon = std::max<std::size_t>(max_depth, 2 * (e.preperiod().size() + e.period().size()) + 8);
  const Ordering oa = lex_compare(e, EpWord::constant(a));
  if (oa != Ordering::Greater) return meagre(CaseTag::Ma, a, b, relation(oa) == "<" ? "<" : "=", s, horizon);
  const Ordering ob = lex_compare(e, EpWord::constant(b));
  if (ob != Ordering::Less) return meagre(CaseTag::Mb, a, b, relation(ob), s, horizon);

  const FiniteWord& per = e.period();
  const auto letters = per.alphabet();
  if (letters.front() >= a && letters.back() <= b) {
    const Rational alpha = Rational(a) + make_rational(per.count(b), per.size());
    if (alpha > a && alpha < b) {
      const EpWord lower = mechanical_word(alpha.get_num(), alpha.get_den(), false);
      const EpWord upper = mechanical_word(alpha.get_num(), alpha.get_den(), true);
      std::vector<CertificateEntry> cert;
      if (e.prepended(a) == lower) cert.push_back({"a·s", "=", "s_{" + to_string(alpha) + ",0}=" + lower.to_string()});
      if (e.prepended(b) == upper) cert.push_back({"b·s", "=", "s'_{" + to_string(alpha) + ",0}=" + upper.to_string()});
      if (!cert.empty()) {
        OrbitResult r = make_result(CaseTag::Mc, upper.period(), alpha, a, b, std::move(cert));
        add_sandwich(r, s, horizon);
        return r;
      }
    }
  }

  const std::size_t max_len = 4 * (e.preperiod().size() + per.size()) + max_depth;
  const CentralPrefix lcp = longest_central_prefix(s, a, b, max_len);
  if (lcp.saturated) undetermined(a, s, max_depth);
  std::vector<CertificateEntry> cert{{"s", "=", e.to_string()}};
  OrbitResult r = generic_case(a, s, lcp.u, std::move(cert));
  add_sandwich(r, s, horizon);
  return r;
}

}  // namespace

OrbitResult dispatch_orbit(Letter a, DigitStream s, std::size_t max_depth) {
  const Letter b = a + 1;
  const EpWord a_omega = EpWord::constant(a);
  const EpWord b_omega = EpWord::constant(b);
  const Ordering oa = lex_compare(s, a_omega, max_depth);
  if (oa == Ordering::Less || oa == Ordering::Equal) {
    return meagre(CaseTag::Ma, a, b, relation(oa), s, max_depth);
  }
  const Ordering ob = lex_compare(s, b_omega, max_depth);
  if (ob == Ordering::Greater || ob == Ordering::Equal) {
    return meagre(CaseTag::Mb, a, b, relation(ob), s, max_depth);
  }
  if (oa != Ordering::Undecided && ob != Ordering::Undecided) {
    const CentralPrefix lcp = longest_central_prefix(s, a, b, max_depth);
    if (!lcp.saturated) {
      std::vector<CertificateEntry> cert{{"s", ">", a_omega.to_string()},
                                         {"s", "<", b_omega.to_string()}};
      OrbitResult r = generic_case(a, s, lcp.u, std::move(cert));
      add_sandwich(r, s, max_depth);
      return r;
    }
  }
  if (auto e = s.resolve_exact(max_depth)) return exact_dispatch(a, *e, max_depth);
  undetermined(a, s, max_depth);
}

OrbitResult locate_orbit(const RealValue& t, const BetaNumber& beta, std::size_t max_depth) {
  const RealValue upper = RealValue(1L) - RealValue(1L) / beta.value();
  if (t.sign() < 0 || compare(t, upper) == Ordering::Greater) {
    throw DomainError("t must lie in [0, 1 - 1/beta]");
  }
  DigitStream d = expand(t, beta, ExpansionKind::Bar);
  const Letter a = d.at(0);
  return dispatch_orbit(a, d.shifted(1), max_depth);
}

FreqResult freq_of_beta(const BetaNumber& beta, std::size_t max_depth) {
  if (auto n = beta.as_integer()) return {Rational(*n - 1), std::nullopt};
  DigitStream d1 = bar_of_one(beta);
  const Letter b = d1.at(0);
  if (b == 0) throw std::logic_error("leading digit of the expansion of 1 is zero");
  OrbitResult r = dispatch_orbit(b - 1, d1.shifted(1), max_depth);
  return {r.frequency, std::move(r)};
}

RealValue delta(const Rational& alpha) {
  if (sgn(alpha) < 0) throw DomainError("Delta is defined for alpha >= 0");
  if (sgn(alpha) == 0) return RealValue(1L);
  if (alpha.get_den() == 1) return RealValue(Rational(alpha + 1));
  const Integer b = ceil_of(alpha);
  const Christoffel c = christoffel(alpha.get_num(), alpha.get_den());
  const FiniteWord digits = static_cast<Letter>(b.get_ui()) + c.central + static_cast<Letter>(b.get_ui());
  const std::size_t q = digits.size();
  std::vector<Integer> coeffs(q + 1);
  coeffs[q] = 1;
  for (std::size_t i = 1; i <= q; ++i) coeffs[q - i] = -Integer(digits[i - 1]);
  return isolate_dominant_root(coeffs, Rational(b), Rational(b + 1));
}

RealValue xi(const Rational& alpha, const BetaNumber& beta) {
  if (sgn(alpha) <= 0) throw DomainError("Xi needs alpha > 0");
  const EpWord w = mechanical_word(alpha.get_num(), alpha.get_den(), true);
  DigitStream d1 = bar_of_one(beta);
  const std::size_t horizon = 4 * w.period().size() + 128;
  Ordering o = lex_compare(d1, w, horizon);
  if (o == Ordering::Undecided) o = compare(beta.value(), delta(alpha));
  if (o == Ordering::Less) {
    throw DomainError("Xi(" + to_string(alpha) + ", beta) is undefined: beta < Delta(alpha)");
  }
  return eval_word(w, beta);
}

Interval xi_enclosure(const RealValue& alpha, const BetaNumber& beta, std::size_t n) {
  if (alpha.sign() <= 0) throw DomainError("Xi needs alpha > 0");
  const FiniteWord w = mechanical_prefix(MechSpec{alpha, RealValue(0L), true}, n);
  DigitStream d1 = bar_of_one(beta);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter x = w[i];
    const Letter y = d1.at(i);
    if (x < y) break;
    if (x > y) throw DomainError("Xi is undefined: s'_{alpha,0} exceeds the expansion of 1");
  }
  const long bits = static_cast<long>(4 * n) + 64;
  const Interval head = eval_word(w, beta).enclose(bits);
  GridPoint g = alpha.grid();
  const Integer top = g.exact_hit ? g.floor : Integer(g.floor + 1);
  const RealValue tail = RealValue(Rational(top)) /
                         (pow(beta.value(), n) * (beta.value() - RealValue(1L)));
  return Interval(head.lo(), head.hi() + tail.enclose(bits).hi());
}

RealValue diam_formula(const BetaNumber& beta, std::size_t q) {
  const RealValue one(1L);
  return (pow(beta.value(), q - 1) - one) / (pow(beta.value(), q) - one);
}

DiamReport diam_classify(const RealValue& xi_val, const BetaNumber& beta, std::size_t horizon) {
  if (xi_val.sign() < 0 || compare(xi_val, RealValue(1L)) == Ordering::Greater) {
    throw DomainError("xi must lie in [0, 1]");
  }
  DigitStream d = expand(xi_val, beta, ExpansionKind::Bar);
  const auto e = d.resolve_exact(horizon);
  if (!e) return diam::Undecided{horizon};
  const Classification c = classify_balanced(*e);
  std::optional<Rational> freq;
  try {
    freq = freq_of_beta(beta, horizon).frequency;
  } catch (const Undetermined&) {
  }
  auto too_steep = [&](const Rational& slope) { return freq && slope > *freq; };
  if (auto m = std::get_if<verdict::Mechanical>(&c)) {
    if (too_steep(m->slope)) return diam::NotSmall{"slope " + to_string(m->slope) + " exceeds Freq(beta)"};
    return diam::Mechanical{m->slope, diam_formula(beta, m->slope.get_den().get_ui())};
  }
  if (auto s = std::get_if<verdict::Skew>(&c)) {
    if (too_steep(s->slope)) return diam::NotSmall{"slope " + to_string(s->slope) + " exceeds Freq(beta)"};
    return diam::Skew{s->slope, s->preperiod_len, diam_formula(beta, s->slope.get_den().get_ui())};
  }
  if (auto u = std::get_if<verdict::Unbalanced>(&c)) {
    return diam::NotSmall{"unbalanced expansion, witness " + show(u->witness)};
  }
  return diam::NotSmall{"expansion uses non-adjacent letters"};
}

std::string describe(const DiamReport& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, diam::Mechanical>) {
          return "MechanicalDiam slope " + to_string(v.slope) + " diam " + v.value.to_string();
        } else if constexpr (std::is_same_v<T, diam::Skew>) {
          return "SkewDiam slope " + to_string(v.slope) + " stable_after " +
                 std::to_string(v.stable_after) + " diam " + v.value.to_string();
        } else if constexpr (std::is_same_v<T, diam::NotSmall>) {
          return "NotSmall (" + v.reason + ")";
        } else {
          return "Undecided within " + std::to_string(v.horizon) + " digits";
        }
      },
      r);
}

Rational rational_xi_reconstruct(const EpWord& w, const Integer& beta) {
  if (beta < 2) throw DomainError("closed form needs an integer base >= 2");
  const std::size_t m = w.preperiod().size();
  const std::size_t q = w.period().size();
  const FiniteWord e = w.preperiod() + w.period();
  auto poly_value = [&](std::size_t len) {
    Integer acc = 0;
    for (std::size_t i = 0; i < len; ++i) acc = acc * beta + e[i];
    return acc;
  };
  const Integer bq1 = ipow(beta, q) - 1;
  if (m == 0) return make_rational(poly_value(q), bq1);
  return make_rational(poly_value(m + q) - poly_value(m), ipow(beta, m) * bq1);
}

}  // namespace betaorbit
