#include "betaorbit/real_value.hpp"

#include <mpfr.h>

#include <cctype>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "betaorbit/errors.hpp"

namespace betaorbit {

namespace {

std::mutex g_policy_mutex;
PrecisionPolicy g_policy;

// An upper bound on log2(r) for r > 0.
long log2_upper(const Rational& r) {
  return static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2)) + 1;
}

Rational magnitude(const Interval& iv) {
  return std::max(abs(iv.lo()), abs(iv.hi()));
}

Rational mignitude(const Interval& iv) {
  if (iv.contains_zero()) return 0;
  return std::min(abs(iv.lo()), abs(iv.hi()));
}

long magnitude_bits(const Interval& iv) {
  Rational m = magnitude(iv);
  return sgn(m) == 0 ? 0 : std::max(0L, log2_upper(m));
}

std::string join_label(const std::string& x, const char* op, const std::string& y) {
  std::string out = "(" + x + op + y + ")";
  if (out.size() > 80) out = out.substr(0, 77) + "...";
  return out;
}

Interval finish(const Interval& iv, long bits) {
  return iv.is_point() ? iv : iv.rounded(bits + 2);
}

Rational rational_from_mpfr(mpfr_srcptr f) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), f);
  return q;
}

}  // namespace

PrecisionPolicy default_precision() {
  std::lock_guard lock(g_policy_mutex);
  return g_policy;
}

void set_default_precision(const PrecisionPolicy& p) {
  std::lock_guard lock(g_policy_mutex);
  g_policy = p;
}

// ---------------------------------------------------------------- validated

struct ValidatedReal::Impl {
  Encloser fn;
  std::string label;
  std::mutex mutex;
  std::map<long, Interval> cache;
};

ValidatedReal::ValidatedReal(Encloser fn, std::string label)
    : impl_(std::make_shared<Impl>()) {
  impl_->fn = std::move(fn);
  impl_->label = std::move(label);
}

ValidatedReal ValidatedReal::exact(const Rational& q) {
  return ValidatedReal([q](long) { return Interval(q); }, to_string(q));
}

ValidatedReal ValidatedReal::pi() {
  return ValidatedReal(
      [](long bits) {
        mpfr_t lo, hi;
        mpfr_init2(lo, bits + 16);
        mpfr_init2(hi, bits + 16);
        mpfr_const_pi(lo, MPFR_RNDD);
        mpfr_const_pi(hi, MPFR_RNDU);
        Interval out(rational_from_mpfr(lo), rational_from_mpfr(hi));
        mpfr_clear(lo);
        mpfr_clear(hi);
        return out;
      },
      "pi");
}

ValidatedReal ValidatedReal::decimal(const Rational& value, long digits) {
  ValidatedReal out([value](long) { return Interval(value); },
                    "dec:" + to_decimal(value, static_cast<int>(digits)));
  out.declared_digits_ = digits;
  return out;
}

Interval ValidatedReal::enclose(long bits) const {
  std::lock_guard lock(impl_->mutex);
  auto it = impl_->cache.lower_bound(bits);
  if (it != impl_->cache.end()) return it->second;
  Interval iv = impl_->fn(bits);
  impl_->cache.emplace(bits, iv);
  return iv;
}

const std::string& ValidatedReal::label() const { return impl_->label; }

ValidatedReal ValidatedReal::operator-() const {
  ValidatedReal x = *this;
  return ValidatedReal([x](long bits) { return -x.enclose(bits); }, "-(" + label() + ")");
}

ValidatedReal operator+(const ValidatedReal& x, const ValidatedReal& y) {
  return ValidatedReal(
      [x, y](long bits) { return finish(x.enclose(bits + 2) + y.enclose(bits + 2), bits); },
      join_label(x.label(), "+", y.label()));
}

ValidatedReal operator-(const ValidatedReal& x, const ValidatedReal& y) {
  return ValidatedReal(
      [x, y](long bits) { return finish(x.enclose(bits + 2) - y.enclose(bits + 2), bits); },
      join_label(x.label(), "-", y.label()));
}

ValidatedReal operator*(const ValidatedReal& x, const ValidatedReal& y) {
  return ValidatedReal(
      [x, y](long bits) {
        const long extra = std::max(magnitude_bits(x.enclose(4)), magnitude_bits(y.enclose(4))) + 3;
        return finish(x.enclose(bits + extra) * y.enclose(bits + extra), bits);
      },
      join_label(x.label(), "*", y.label()));
}

ValidatedReal operator/(const ValidatedReal& x, const ValidatedReal& y) {
  return ValidatedReal(
      [x, y](long bits) {
        Interval d;
        long k = 8;
        for (;; k *= 2) {
          d = y.enclose(k);
          if (!d.contains_zero()) break;
          if (k > 2 * bits + 64) throw InsufficientPrecision();
        }
        const long inv_bits = log2_upper(1 / mignitude(d));
        const long extra = 2 * std::max(0L, inv_bits) + magnitude_bits(x.enclose(4)) + 4;
        return finish(x.enclose(bits + extra) / y.enclose(std::max(k, bits + extra)), bits);
      },
      join_label(x.label(), "/", y.label()));
}

// ---------------------------------------------------------------- RealValue

namespace {

using Variant = std::variant<Rational, Quadratic, AlgebraicElement, ValidatedReal>;

}  // namespace

RealValue::RealValue(Quadratic q) : v_(Rational(0)) {
  if (q.is_rational()) {
    v_ = q.r();
  } else {
    v_ = std::move(q);
  }
}

RealValue::RealValue(AlgebraicElement a) : v_(Rational(0)) {
  if (auto r = a.as_rational()) {
    v_ = *r;
  } else {
    v_ = std::move(a);
  }
}

RealValue::Kind RealValue::kind() const {
  switch (v_.index()) {
    case 0: return Kind::Rational;
    case 1: return Kind::Quadratic;
    case 2: return Kind::Algebraic;
    default: return Kind::Validated;
  }
}

std::string_view to_string(RealValue::Kind k) {
  switch (k) {
    case RealValue::Kind::Rational: return "rational";
    case RealValue::Kind::Quadratic: return "quadratic";
    case RealValue::Kind::Algebraic: return "algebraic";
    case RealValue::Kind::Validated: return "validated";
  }
  return "?";
}

Interval RealValue::enclose(long bits) const {
  return std::visit(
      [bits](const auto& x) -> Interval {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return Interval(x);
        } else {
          return x.enclose(bits);
        }
      },
      v_);
}

ValidatedReal RealValue::to_validated() const {
  if (auto v = validated()) return *v;
  if (auto q = rational()) return ValidatedReal::exact(*q);
  RealValue self = *this;
  return ValidatedReal([self](long bits) { return self.enclose(bits); }, self.to_string(20));
}

int RealValue::sign(const PrecisionPolicy& policy) const {
  if (auto q = rational()) return sgn(*q);
  if (auto q = quadratic()) return q->sign();
  if (auto a = algebraic()) return a->sign();
  const ValidatedReal& v = *validated();
  for (long digits = policy.start_digits; digits <= policy.max_digits; digits *= 2) {
    try {
      if (auto s = v.enclose(digits_to_bits(digits)).sign()) return *s;
    } catch (const InsufficientPrecision&) {
    }
  }
  throw PrecisionExhausted("sign of " + v.label() + " undecided at the precision cap",
                           policy.max_digits * 2);
}

GridPoint RealValue::grid(const PrecisionPolicy& policy) const {
  if (auto q = rational()) return grid_point(*q);
  if (auto q = quadratic()) return q->grid();
  if (auto a = algebraic()) return a->grid();
  const ValidatedReal& v = *validated();
  for (long digits = policy.start_digits; digits <= policy.max_digits; digits *= 2) {
    try {
      if (auto g = v.enclose(digits_to_bits(digits)).grid()) return *g;
    } catch (const InsufficientPrecision&) {
    }
  }
  throw PrecisionExhausted(v.label() + " is not separable from an integer at the precision cap",
                           policy.max_digits * 2);
}

std::string RealValue::key() const {
  if (auto q = rational()) return "r:" + betaorbit::to_string(*q);
  if (auto q = quadratic()) return q->key();
  if (auto a = algebraic()) return a->key();
  throw std::logic_error("validated reals have no exact key");
}

std::string RealValue::to_string(int digits) const {
  if (auto q = rational()) return betaorbit::to_string(*q);
  if (auto q = quadratic()) return q->to_string();
  if (algebraic()) return to_decimal(digits) + "...";
  return enclose(digits_to_bits(digits)).to_string(digits);
}

std::string RealValue::repr_tag(int digits) const {
  switch (kind()) {
    case Kind::Rational: return "exact-rational";
    case Kind::Quadratic: return "quadratic";
    case Kind::Algebraic: return "algebraic";
    case Kind::Validated: {
      Interval iv = enclose(digits_to_bits(digits));
      return "enclosure±" + power_of_ten_bound(iv.width() / 2);
    }
  }
  return "?";
}

std::string RealValue::to_decimal(int digits) const {
  if (auto q = rational()) return betaorbit::to_decimal(*q, digits);
  return betaorbit::to_decimal(enclose(digits_to_bits(digits + 4)).mid(), digits);
}

template <class Op>
RealValue combine(const RealValue& x, const RealValue& y, Op op) {
  using K = RealValue::Kind;
  const K kx = x.kind();
  const K ky = y.kind();
  if (kx == K::Rational && ky == K::Rational) {
    return RealValue(Rational(op(*x.rational(), *y.rational())));
  }
  if (kx != K::Validated && ky != K::Validated) {
    if ((kx == K::Quadratic || ky == K::Quadratic) && kx != K::Algebraic && ky != K::Algebraic) {
      const Integer& d = kx == K::Quadratic ? x.quadratic()->d() : y.quadratic()->d();
      auto lift = [&d](const RealValue& v) {
        if (auto q = v.rational()) return Quadratic(*q, Rational(0), d);
        return *v.quadratic();
      };
      if (kx == K::Rational || ky == K::Rational || x.quadratic()->d() == y.quadratic()->d()) {
        return RealValue(op(lift(x), lift(y)));
      }
    }
    if ((kx == K::Algebraic || ky == K::Algebraic) && kx != K::Quadratic && ky != K::Quadratic) {
      const auto& field = kx == K::Algebraic ? x.algebraic()->field() : y.algebraic()->field();
      auto lift = [&field](const RealValue& v) {
        if (auto q = v.rational()) return AlgebraicElement::constant(field, *q);
        return *v.algebraic();
      };
      if (kx == K::Rational || ky == K::Rational || x.algebraic()->field() == y.algebraic()->field()) {
        return RealValue(op(lift(x), lift(y)));
      }
    }
  }
  return RealValue(op(x.to_validated(), y.to_validated()));
}

RealValue RealValue::operator-() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return RealValue(T(-x));
      },
      v_);
}

RealValue operator+(const RealValue& x, const RealValue& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}

RealValue operator-(const RealValue& x, const RealValue& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}

RealValue operator*(const RealValue& x, const RealValue& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a * b; });
}

RealValue operator/(const RealValue& x, const RealValue& y) {
  if (y.is_exact() && y.sign() == 0) throw std::domain_error("division by zero");
  return combine(x, y, [](const auto& a, const auto& b) { return a / b; });
}

Ordering compare(const RealValue& x, const RealValue& y, const PrecisionPolicy& policy) {
  const int s = (x - y).sign(policy);
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

GridPoint compare_to_integer_grid(const RealValue& x, const PrecisionPolicy& policy) {
  return x.grid(policy);
}

RealValue pow(const RealValue& x, unsigned long n) {
  RealValue out(1L);
  RealValue base = x;
  while (n) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

// ---------------------------------------------------------------- roots

namespace {

RealValue isolate_root(const poly::QPoly& p, const Rational& lo, const Rational& hi) {
  auto field = AlgebraicField::create(p, lo, hi);
  if (auto r = field->rational_root()) return *r;
  poly::QPoly m = field->modulus();
  if (poly::degree(m) == 2) {
    // x^2 + c1 x + c0
    const Rational c1 = m[1], c0 = m[0];
    const Rational disc = c1 * c1 - 4 * c0;
    const Integer nd = disc.get_num() * disc.get_den();
    const Rational half = -c1 / 2;
    if (mpz_perfect_square_p(nd.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
      const Rational r = make_rational(root, disc.get_den()) / 2;
      const Rational cand = (half + r > lo && half + r < hi) ? Rational(half + r) : Rational(half - r);
      return cand;
    }
    Integer k, d;
    extract_square(nd, k, d);
    const Rational s = make_rational(k, 2 * disc.get_den());
    Quadratic plus(half, s, d);
    const Quadratic lo_diff = plus + Rational(-lo);
    const Quadratic hi_diff = plus + Rational(-hi);
    if (lo_diff.sign() > 0 && hi_diff.sign() < 0) return plus;
    return Quadratic(half, -s, d);
  }
  return AlgebraicElement::generator(field);
}

}  // namespace

RealValue isolate_dominant_root(const std::vector<Integer>& coeffs, const Rational& lo,
                                const Rational& hi) {
  return isolate_root(poly::from_integers(coeffs), lo, hi);
}

// ---------------------------------------------------------------- parsing

RealValue parse_real(std::string_view text_in) {
  std::string text(text_in);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(0, 1);
  auto starts = [&text](std::string_view p) { return text.rfind(p, 0) == 0; };

  if (starts("int:")) {
    Rational q = parse_rational(text.substr(4));
    if (q.get_den() != 1) throw ParseError("not an integer: '" + text + "'");
    return q;
  }
  if (starts("rat:")) return parse_rational(text.substr(4));
  if (starts("quad:")) return Quadratic::parse(text.substr(5));
  if (text == "pi") return ValidatedReal::pi();
  if (starts("dec:")) {
    static const std::regex kDec(R"(^([+-]?\d*\.?\d+)(?:@(\d+))?$)");
    std::smatch m;
    const std::string body = text.substr(4);
    if (!std::regex_match(body, m, kDec)) throw ParseError("bad decimal spec: '" + text + "'");
    const Rational v = parse_rational(m[1].str());
    long digits = m[2].matched ? std::stol(m[2].str()) : default_precision().start_digits;
    return ValidatedReal::decimal(v, digits);
  }
  if (starts("poly:")) {
    static const std::regex kPoly(R"(^\[([^\]]*)\]\s*@\s*\(\s*([^,]+?)\s*,\s*([^)]+?)\s*\)$)");
    std::smatch m;
    const std::string body = text.substr(5);
    if (!std::regex_match(body, m, kPoly)) throw ParseError("bad polynomial spec: '" + text + "'");
    poly::QPoly p;
    std::stringstream ss(m[1].str());
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_rational(item));
    poly::trim(p);
    return isolate_root(p, parse_rational(m[2].str()), parse_rational(m[3].str()));
  }
  return parse_rational(text);
}

// ---------------------------------------------------------------- beta

BetaNumber::BetaNumber(RealValue value, std::string spec)
    : value_(std::move(value)), spec_(std::move(spec)) {
  if (compare(value_, RealValue(1L)) != Ordering::Greater) {
    throw DomainError("the base must exceed 1");
  }
  if (spec_.empty()) spec_ = value_.to_string();
}

BetaNumber BetaNumber::parse(std::string_view text) {
  return BetaNumber(parse_real(text), std::string(text));
}

std::optional<Integer> BetaNumber::as_integer() const {
  if (auto q = value_.rational(); q && q->get_den() == 1) return q->get_num();
  return std::nullopt;
}

Integer BetaNumber::floor() const { return value_.grid().floor; }

Integer BetaNumber::alphabet_size() const {
  GridPoint g = value_.grid();
  return g.exact_hit ? g.floor : Integer(g.floor + 1);
}

// ---------------------------------------------------------------- words

namespace {

// sum w_i beta^(n-i)
RealValue horner(const FiniteWord& w, const RealValue& beta) {
  RealValue acc(0L);
  for (Letter a : w) acc = acc * beta + RealValue(static_cast<long>(a));
  return acc;
}

}  // namespace

RealValue eval_word(const FiniteWord& w, const RealValue& beta) {
  if (w.empty()) return RealValue(0L);
  return horner(w, beta) / pow(beta, w.size());
}

RealValue eval_word(const EpWord& w, const RealValue& beta) {
  const FiniteWord& pre = w.preperiod();
  const FiniteWord& per = w.period();
  const RealValue bq1 = pow(beta, per.size()) - RealValue(1L);
  const RealValue num = horner(pre, beta) * bq1 + horner(per, beta);
  return num / (pow(beta, pre.size()) * bq1);
}

}  // namespace betaorbit
