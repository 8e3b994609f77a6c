#include "betaorbit/algebraic.hpp"

#include <set>
#include <stdexcept>

#include "betaorbit/errors.hpp"

namespace betaorbit {

using poly::QPoly;

namespace {

int roots_in_open(const QPoly& p, const Rational& lo, const Rational& hi) {
  int n = poly::sturm_count(p, lo, hi);
  if (sgn(poly::eval(p, hi)) == 0) --n;
  return n;
}

std::string coeff_list(const QPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out + "]";
}

}  // namespace

AlgebraicField::AlgebraicField(QPoly p, Rational lo, Rational hi)
    : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

std::shared_ptr<AlgebraicField> AlgebraicField::create(const QPoly& p,
                                                       const Rational& lo,
                                                       const Rational& hi) {
  if (poly::degree(p) < 1) throw NoRoot("constant polynomial has no isolated root");
  if (lo >= hi) throw NoRoot("empty isolating interval");
  QPoly sqf = poly::squarefree_part(p);
  const int n = roots_in_open(sqf, lo, hi);
  if (n == 0) throw NoRoot("no root of the polynomial in the interval");
  if (n > 1) throw MultipleRoots("interval isolates " + std::to_string(n) + " roots");

  std::shared_ptr<AlgebraicField> f(new AlgebraicField(sqf, lo, hi));
  std::lock_guard lock(f->mutex_);
  if (poly::degree(f->p_) == 1) {
    f->replace_modulus_locked(f->p_);
    return f;
  }
  while (sgn(poly::eval(f->p_, f->lo_)) == 0 || sgn(poly::eval(f->p_, f->hi_)) == 0) {
    const Rational mid = (f->lo_ + f->hi_) / 2;
    if (sgn(poly::eval(f->p_, mid)) == 0) {
      f->replace_modulus_locked(QPoly{-mid, Rational(1)});
      break;
    }
    if (roots_in_open(f->p_, f->lo_, mid) == 1) {
      f->hi_ = mid;
    } else {
      f->lo_ = mid;
    }
  }
  return f;
}

QPoly AlgebraicField::modulus() const {
  std::lock_guard lock(mutex_);
  return p_;
}

int AlgebraicField::degree() const {
  std::lock_guard lock(mutex_);
  return poly::degree(p_);
}

Interval AlgebraicField::isolating_interval() const {
  std::lock_guard lock(mutex_);
  return Interval(lo_, hi_);
}

std::optional<Rational> AlgebraicField::rational_root() const {
  std::lock_guard lock(mutex_);
  if (lo_ == hi_) return lo_;
  return std::nullopt;
}

void AlgebraicField::replace_modulus_locked(QPoly p) {
  p_ = poly::monic(p);
  if (poly::degree(p_) == 1) {
    lo_ = hi_ = -p_[0];
  }
}

void AlgebraicField::bisect_locked() {
  if (lo_ == hi_) return;
  const Rational mid = (lo_ + hi_) / 2;
  const int s = sgn(poly::eval(p_, mid));
  if (s == 0) {
    replace_modulus_locked(QPoly{-mid, Rational(1)});
    return;
  }
  if (s == sgn(poly::eval(p_, lo_))) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

bool AlgebraicField::vanishes_locked(const QPoly& r_in) {
  QPoly r = poly::mod(r_in, p_);
  if (poly::is_zero(r)) return true;
  if (lo_ == hi_) return sgn(poly::eval(r, lo_)) == 0;
  QPoly g = poly::gcd(r, p_);
  if (poly::degree(g) < 1) return false;
  const bool zero = sgn(poly::eval(g, lo_)) * sgn(poly::eval(g, hi_)) < 0;
  replace_modulus_locked(zero ? g : poly::divmod(p_, g).first);
  return zero;
}

Interval AlgebraicField::enclose_locked(const QPoly& r_in, long bits) {
  const Rational target = make_rational(1, Integer(1) << static_cast<mp_bitcnt_t>(bits));
  for (;;) {
    QPoly r = poly::mod(r_in, p_);
    if (lo_ == hi_) return Interval(poly::eval(r, lo_));
    Interval iv = poly::eval(r, Interval(lo_, hi_));
    if (iv.width() <= target) return iv.rounded(bits + 4);
    bisect_locked();
  }
}

int AlgebraicField::sign_at_root(const QPoly& r_in) {
  std::lock_guard lock(mutex_);
  if (vanishes_locked(r_in)) return 0;
  for (;;) {
    QPoly r = poly::mod(r_in, p_);
    if (lo_ == hi_) return sgn(poly::eval(r, lo_));
    Interval iv = poly::eval(r, Interval(lo_, hi_));
    if (auto s = iv.sign(); s && *s != 0) return *s;
    bisect_locked();
  }
}

GridPoint AlgebraicField::grid_at_root(const QPoly& r_in) {
  std::lock_guard lock(mutex_);
  std::set<Integer> checked;
  for (;;) {
    QPoly r = poly::mod(r_in, p_);
    if (lo_ == hi_) return grid_point(poly::eval(r, lo_));
    Interval iv = poly::eval(r, Interval(lo_, hi_));
    if (!iv.is_point()) {
      if (auto g = iv.grid()) return *g;
    }
    for (Integer n = ceil_of(iv.lo()); n <= floor_of(iv.hi()); ++n) {
      if (checked.count(n)) continue;
      checked.insert(n);
      if (vanishes_locked(poly::sub(r, poly::constant(Rational(n))))) return {n, true};
    }
    bisect_locked();
  }
}

Interval AlgebraicField::enclose(const QPoly& r, long bits) {
  std::lock_guard lock(mutex_);
  return enclose_locked(r, bits);
}

QPoly AlgebraicField::reduce(const QPoly& r) const {
  std::lock_guard lock(mutex_);
  return poly::mod(r, p_);
}

QPoly AlgebraicField::multiply(const QPoly& x, const QPoly& y) {
  std::lock_guard lock(mutex_);
  return poly::mod(poly::mul(x, y), p_);
}

QPoly AlgebraicField::inverse(const QPoly& r_in) {
  std::lock_guard lock(mutex_);
  for (;;) {
    QPoly r = poly::mod(r_in, p_);
    if (poly::is_zero(r)) throw std::domain_error("division by zero");
    auto [g, s] = poly::half_extended_gcd(r, p_);
    if (poly::degree(g) == 0) return s;
    if (vanishes_locked(r)) throw std::domain_error("division by zero");
  }
}

std::string AlgebraicField::describe() const {
  std::lock_guard lock(mutex_);
  return "poly:" + coeff_list(p_) + "@(" + to_string(lo_) + "," + to_string(hi_) + ")";
}

AlgebraicElement::AlgebraicElement(std::shared_ptr<AlgebraicField> field, QPoly rep)
    : field_(std::move(field)), rep_(field_->reduce(rep)) {}

AlgebraicElement AlgebraicElement::generator(std::shared_ptr<AlgebraicField> field) {
  return AlgebraicElement(std::move(field), poly::identity());
}

AlgebraicElement AlgebraicElement::constant(std::shared_ptr<AlgebraicField> field,
                                            const Rational& c) {
  return AlgebraicElement(std::move(field), poly::constant(c));
}

std::optional<Rational> AlgebraicElement::as_rational() const {
  QPoly r = field_->reduce(rep_);
  if (poly::degree(r) <= 0) return r.empty() ? Rational(0) : r[0];
  if (auto root = field_->rational_root()) return poly::eval(r, *root);
  return std::nullopt;
}

namespace {

void require_same_field(const AlgebraicElement& x, const AlgebraicElement& y) {
  if (x.field() != y.field()) throw std::invalid_argument("algebraic elements from different fields");
}

}  // namespace

AlgebraicElement AlgebraicElement::operator-() const {
  return AlgebraicElement(field_, poly::scale(rep_, Rational(-1)));
}

AlgebraicElement operator+(const AlgebraicElement& x, const AlgebraicElement& y) {
  require_same_field(x, y);
  return AlgebraicElement(x.field_, poly::add(x.rep_, y.rep_));
}

AlgebraicElement operator-(const AlgebraicElement& x, const AlgebraicElement& y) {
  require_same_field(x, y);
  return AlgebraicElement(x.field_, poly::sub(x.rep_, y.rep_));
}

AlgebraicElement operator*(const AlgebraicElement& x, const AlgebraicElement& y) {
  require_same_field(x, y);
  return AlgebraicElement(x.field_, x.field_->multiply(x.rep_, y.rep_));
}

AlgebraicElement operator/(const AlgebraicElement& x, const AlgebraicElement& y) {
  require_same_field(x, y);
  return AlgebraicElement(x.field_, x.field_->multiply(x.rep_, x.field_->inverse(y.rep_)));
}

AlgebraicElement AlgebraicElement::plus(const Rational& c) const {
  return AlgebraicElement(field_, poly::add(rep_, poly::constant(c)));
}

AlgebraicElement AlgebraicElement::times(const Rational& c) const {
  return AlgebraicElement(field_, poly::scale(rep_, c));
}

std::string AlgebraicElement::key() const {
  return "a:" + coeff_list(field_->reduce(rep_));
}

std::string AlgebraicElement::to_string() const {
  return coeff_list(field_->reduce(rep_)) + "@" + field_->describe();
}

}  // namespace betaorbit
