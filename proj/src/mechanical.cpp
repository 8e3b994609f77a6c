#include "betaorbit/mechanical.hpp"

#include <algorithm>
#include <stdexcept>

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

Integer floor_or_ceil(const RealValue& v, bool upper) {
  GridPoint g = v.grid();
  if (!upper || g.exact_hit) return g.floor;
  return g.floor + 1;
}

Letter to_letter(const Integer& z) {
  if (z < 0 || !z.fits_ulong_p()) throw std::out_of_range("digit out of range");
  return static_cast<Letter>(z.get_ui());
}

FiniteWord rational_mechanical(const Rational& alpha, const Rational& rho, bool upper,
                               std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  auto at = [&](std::size_t k) {
    Rational v = alpha * static_cast<unsigned long>(k) + rho;
    return upper ? ceil_of(v) : floor_of(v);
  };
  Integer prev = at(0);
  for (std::size_t k = 0; k < n; ++k) {
    Integer next = at(k + 1);
    out.push_back(to_letter(next - prev));
    prev = next;
  }
  return FiniteWord(std::move(out));
}

}  // namespace

FiniteWord mechanical_prefix(const MechSpec& spec, std::size_t n) {
  if (spec.slope.sign() <= 0) throw DomainError("slope must be positive");
  if (auto a = spec.slope.rational()) {
    if (auto r = spec.intercept.rational()) return rational_mechanical(*a, *r, spec.upper, n);
  }
  std::vector<Letter> out;
  out.reserve(n);
  RealValue v = spec.intercept;
  Integer prev = floor_or_ceil(v, spec.upper);
  for (std::size_t k = 0; k < n; ++k) {
    v = v + spec.slope;
    Integer next = floor_or_ceil(v, spec.upper);
    out.push_back(to_letter(next - prev));
    prev = next;
  }
  return FiniteWord(std::move(out));
}

Christoffel christoffel(const Integer& p, const Integer& q) {
  if (q < 1 || p < 0) throw DomainError("christoffel needs p >= 0 and q >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw DomainError("p and q must be coprime");
  const Rational alpha = make_rational(p, q);
  const std::size_t len = q.get_ui();
  Christoffel out;
  out.lower = rational_mechanical(alpha, 0, false, len);
  out.upper = rational_mechanical(alpha, 0, true, len);
  if (len >= 2) out.central = out.lower.substr(1, len - 2);
  return out;
}

EpWord mechanical_word(const Integer& p, const Integer& q, bool upper) {
  Christoffel c = christoffel(p, q);
  return EpWord::periodic(upper ? c.upper : c.lower);
}

FiniteWord characteristic_prefix(const RealValue& slope, std::size_t n) {
  if (slope.grid().exact_hit) throw DomainError("characteristic word needs a non-integer slope");
  FiniteWord s = mechanical_prefix(MechSpec{slope, RealValue(0L), false}, n + 1);
  return s.substr(1);
}

BalanceResult is_balanced(const EpWord& w) {
  FiniteWord window = w.preperiod() + w.period();
  auto alpha = window.alphabet();
  if (alpha.size() > 2) throw NonBinaryWord("balance is defined for binary words");
  if (alpha.size() <= 1) return {};
  const Letter a = alpha[0], b = alpha[1];
  const std::size_t bound = w.preperiod().size() + 2 * w.period().size();
  std::size_t bad_len = 0;
  for (std::size_t n = 1; n <= bound && !bad_len; ++n) {
    std::size_t lo = n, hi = 0;
    for (const auto& f : factors(w, n)) {
      const std::size_t c = f.count(b);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi > lo + 1) bad_len = n;
  }
  if (!bad_len) return {};
  for (std::size_t m = 0; m + 2 <= bad_len; ++m) {
    const FactorSet longer = factors(w, m + 2);
    for (const auto& u : factors(w, m)) {
      if (!u.is_palindrome()) continue;
      if (longer.count(a + u + a) && longer.count(b + u + b)) return {false, u};
    }
  }
  throw std::logic_error("unbalanced word without a palindromic witness");
}

Classification classify_balanced(const EpWord& w) {
  const FiniteWord window = w.preperiod() + w.period();
  const auto alpha = window.alphabet();
  if (alpha.size() == 1) {
    return verdict::Mechanical{Rational(alpha[0]), w};
  }
  if (alpha.size() > 2 || alpha[1] != alpha[0] + 1) {
    return verdict::NotBinary{alpha.front(), alpha.back()};
  }
  const Letter a = alpha[0], b = alpha[1];
  BalanceResult bal = is_balanced(w);
  if (!bal.balanced) return verdict::Unbalanced{*bal.witness};
  const FiniteWord& per = w.period();
  const Rational slope = Rational(a) + make_rational(per.count(b), per.size());
  if (w.is_purely_periodic()) {
    Christoffel c = christoffel(slope.get_num(), slope.get_den());
    for (std::size_t k = 0; k < per.size(); ++k) {
      if (per.rotated_left(k) == c.lower) {
        return verdict::Mechanical{slope, EpWord::periodic(c.upper)};
      }
    }
  }
  return verdict::Skew{slope, w.preperiod().size()};
}

std::string describe(const Classification& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, verdict::Mechanical>) {
          return "Mechanical slope " + to_string(v.slope) + " representative " +
                 v.representative.to_string();
        } else if constexpr (std::is_same_v<T, verdict::Skew>) {
          return "Skew slope " + to_string(v.slope) + " preperiod " +
                 std::to_string(v.preperiod_len);
        } else if constexpr (std::is_same_v<T, verdict::Unbalanced>) {
          return "Unbalanced witness " + (v.witness.empty() ? std::string("ε") : v.witness.to_string());
        } else {
          return "NotBinary letters " + std::to_string(v.low) + ".." + std::to_string(v.high);
        }
      },
      c);
}

namespace {

FiniteWord apply_script(const std::string& script, FiniteWord w, Letter a, Letter b) {
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    FiniteWord out;
    for (Letter c : w) {
      if (*it == 'a') {
        if (c == a) out += a;
        else out += FiniteWord{a, b};
      } else if (*it == 'b') {
        if (c == a) out += FiniteWord{b, a};
        else out += b;
      } else {
        throw ParseError("morphism script letters must be 'a' or 'b'");
      }
    }
    w = std::move(out);
  }
  return w;
}

}  // namespace

FiniteWord skew_word(const std::string& script, std::size_t l, Letter x, Letter y, std::size_t n,
                     Letter a, Letter b) {
  FiniteWord base = FiniteWord::repeat(x, l) + y + FiniteWord::repeat(x, n);
  return apply_script(script, base, a, b).substr(0, n);
}

EpWord skew_epword(const std::string& script, std::size_t l, Letter x, Letter y, Letter a,
                   Letter b) {
  return EpWord(apply_script(script, FiniteWord::repeat(x, l) + y, a, b),
                apply_script(script, FiniteWord{x}, a, b));
}

}  // namespace betaorbit
