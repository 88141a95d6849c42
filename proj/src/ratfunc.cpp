#include "gkp/ratfunc.hpp"

#include "gkp/errors.hpp"

namespace gkp {

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (den_.is_one()) return;
  // Shared monomial content: per-variable minimum exponent over all terms
  // of numerator and denominator together.
  Monomial cn = num_.content_monomial();
  Monomial cd = den_.content_monomial();
  MonomialBuilder joint;
  for (const auto& [s, e] : cn.entries()) {
    int o = cd.exponent(s);
    joint.mul(s, e < o ? e : o);
  }
  for (const auto& [s, e] : cd.entries())
    if (cn.exponent(s) == 0 && e < 0) joint.mul(s, e);
  Monomial shift = std::move(joint).build().inverse();
  if (!shift.is_one()) {
    num_ = num_.times_monomial(shift);
    den_ = den_.times_monomial(shift);
  }
  const Rational lc = den_.leading_term().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw division_by_zero_error("RatFunc division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw division_by_zero_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k == 0) return RatFunc(LaurentPoly::one());
  if (k < 0) {
    if (is_zero())
      throw division_by_zero_error("zero to a negative power");
    return inverse().pow(-k);
  }
  RatFunc r(LaurentPoly::one());
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

LaurentPoly RatFunc::as_polynomial() const {
  if (den_.is_one()) return num_;
  return exact_div(num_, den_);
}

std::optional<LaurentPoly> RatFunc::try_polynomial() const {
  if (den_.is_one()) return num_;
  try {
    return exact_div(num_, den_);
  } catch (const inexact_division_error&) {
    return std::nullopt;
  }
}

bool RatFunc::is_constant() const {
  if (num_.is_constant() && den_.is_constant()) return true;
  auto p = try_polynomial();
  return p && p->is_constant();
}

Rational RatFunc::constant_value() const {
  if (num_.is_constant() && den_.is_constant())
    return num_.constant_value() / den_.constant_value();
  return as_polynomial().constant_value();
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc substitute(const LaurentPoly& p, const SubstMap& assignment) {
  std::map<std::pair<SymId, int>, RatFunc> powers;
  auto image_pow = [&](SymId s, int e) -> const RatFunc& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const RatFunc& img = assignment.at(s);
    RatFunc value;
    if (e < 0 && img.is_zero())
      throw pole_error("substitution inverts a zero image of '" +
                       SymbolTable::instance().name(s) + "'");
    value = img.pow(e);
    return powers.emplace(key, std::move(value)).first->second;
  };
  RatFunc out;
  for (const auto& [m, c] : p.terms()) {
    RatFunc termval = RatFunc::constant(c);
    MonomialBuilder untouched;
    for (const auto& [s, e] : m.entries()) {
      if (assignment.count(s)) {
        termval = termval * image_pow(s, e);
      } else {
        untouched.mul(s, e);
      }
    }
    Monomial rest = std::move(untouched).build();
    if (!rest.is_one())
      termval = termval * RatFunc(LaurentPoly::term(rest, Rational(1)));
    out = out + termval;
  }
  return out;
}

RatFunc substitute(const RatFunc& f, const SubstMap& assignment) {
  RatFunc den = substitute(f.den(), assignment);
  if (den.is_zero())
    throw pole_error("substitution makes a denominator vanish");
  return substitute(f.num(), assignment) / den;
}

}  // namespace gkp
