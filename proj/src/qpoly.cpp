#include "betaorbit/qpoly.hpp"

#include <stdexcept>

namespace betaorbit::poly {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (sgn(p[i - 1]) != 0) return static_cast<int>(i) - 1;
  }
  return -1;
}

bool is_zero(const QPoly& p) { return degree(p) < 0; }

QPoly from_integers(const std::vector<Integer>& coeffs) {
  QPoly out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c);
  trim(out);
  return out;
}

QPoly constant(const Rational& c) {
  QPoly out{c};
  trim(out);
  return out;
}

QPoly identity() { return QPoly{Rational(0), Rational(1)}; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly scale(const QPoly& a, const Rational& c) {
  QPoly out(a);
  for (auto& x : out) x *= c;
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  QPoly rem(a);
  trim(rem);
  QPoly quot;
  const Rational lead = b[static_cast<std::size_t>(db)];
  while (degree(rem) >= db) {
    const int dr = degree(rem);
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    Rational c = rem[static_cast<std::size_t>(dr)] / lead;
    if (quot.size() <= shift) quot.resize(shift + 1);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) {
      rem[shift + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
    }
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

QPoly mod(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  const int d = degree(a);
  if (d < 0) return {};
  return scale(a, 1 / a[static_cast<std::size_t>(d)]);
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    QPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::pair<QPoly, QPoly> half_extended_gcd(const QPoly& a, const QPoly& m) {
  // Invariant: s0*a == r0 and s1*a == r1 (mod m).
  QPoly r0 = mod(a, m), r1 = m;
  QPoly s0 = constant(Rational(1)), s1;
  trim(r0);
  if (is_zero(r0)) return {monic(m), {}};
  while (!is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational lead = r0[static_cast<std::size_t>(degree(r0))];
  return {scale(r0, 1 / lead), mod(scale(s0, 1 / lead), m)};
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  trim(out);
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  QPoly g = gcd(p, derivative(p));
  if (degree(g) <= 0) return monic(p);
  return monic(divmod(p, g).first);
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
  return acc;
}

Interval eval(const QPoly& p, const Interval& x) {
  Interval acc{Rational(0)};
  for (std::size_t i = p.size(); i > 0; --i) {
    acc = acc * x + Interval(p[i - 1]);
  }
  return acc;
}

namespace {

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<QPoly> chain;
  QPoly a = p;
  trim(a);
  QPoly b = derivative(a);
  chain.push_back(a);
  while (!is_zero(b)) {
    chain.push_back(b);
    QPoly r = scale(mod(a, b), Rational(-1));
    a = std::move(b);
    b = std::move(r);
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace betaorbit::poly
