#include "gkp/laurent.hpp"

#include <algorithm>

#include "gkp/errors.hpp"

namespace gkp {

namespace {

inline bool term_mono_less(const LaurentPoly::Term& a,
                           const LaurentPoly::Term& b) {
  return a.first.cmp(b.first) == std::strong_ordering::less;
}

}  // namespace

LaurentPoly LaurentPoly::constant(Rational c) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace_back(Monomial::one(), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(Symbol s, int exponent) {
  LaurentPoly p;
  p.t_.emplace_back(Monomial(s, exponent), Rational(1));
  return p;
}

LaurentPoly LaurentPoly::term(Monomial m, Rational c) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace_back(std::move(m), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_unsorted(TermVec terms) {
  std::sort(terms.begin(), terms.end(), term_mono_less);
  LaurentPoly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first) {
      p.t_.back().second += t.second;
      if (p.t_.back().second == 0) p.t_.pop_back();
    } else if (t.second != 0) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.front().first.is_one());
}

bool LaurentPoly::is_one() const {
  return t_.size() == 1 && t_.front().first.is_one() &&
         t_.front().second == 1;
}

Rational LaurentPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw internal_error("constant_value on a non-constant");
  return t_.front().second;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
  if (t_.empty()) throw internal_error("leading_term of zero");
  return t_.back();
}

const LaurentPoly::Term& LaurentPoly::trailing_term() const {
  if (t_.empty()) throw internal_error("trailing_term of zero");
  return t_.front();
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return t.first.cmp(key) ==
                                      std::strong_ordering::less;
                             });
  if (it != t_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  } else {
    t_.insert(it, Term{m, c});
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.emplace_back(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  auto a = t_.begin(), b = o.t_.begin();
  while (a != t_.end() && b != o.t_.end()) {
    const auto ord = a->first.cmp(b->first);
    if (ord == std::strong_ordering::less) {
      r.t_.push_back(*a++);
    } else if (ord == std::strong_ordering::greater) {
      r.t_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) r.t_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  r.t_.insert(r.t_.end(), a, t_.end());
  r.t_.insert(r.t_.end(), b, o.t_.end());
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  auto a = t_.begin(), b = o.t_.begin();
  while (a != t_.end() && b != o.t_.end()) {
    const auto ord = a->first.cmp(b->first);
    if (ord == std::strong_ordering::less) {
      r.t_.push_back(*a++);
    } else if (ord == std::strong_ordering::greater) {
      r.t_.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Rational c = a->second - b->second;
      if (c != 0) r.t_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  r.t_.insert(r.t_.end(), a, t_.end());
  for (; b != o.t_.end(); ++b) r.t_.emplace_back(b->first, -b->second);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  *this = *this + o;
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  *this = *this - o;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (t_.empty() || o.t_.empty()) return LaurentPoly();
  if (o.t_.size() == 1) {
    const auto& [mb, cb] = o.t_.front();
    LaurentPoly r;
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_) r.t_.emplace_back(m * mb, c * cb);
    return r;  // order is preserved by translation invariance
  }
  TermVec products;
  products.reserve(t_.size() * o.t_.size());
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) products.emplace_back(ma * mb, ca * cb);
  return from_unsorted(std::move(products));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& [m, k] : t_) r.t_.emplace_back(m, k * c);
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  LaurentPoly r;
  r.t_.reserve(t_.size());
  for (const auto& [mm, c] : t_) r.t_.emplace_back(mm * m, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw domain_error("LaurentPoly::pow needs a nonnegative exponent");
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  return p.scaled(c);
}

Monomial LaurentPoly::content_monomial() const {
  if (t_.empty()) return Monomial::one();
  std::map<SymId, int> mins;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (first) {
      for (const auto& [s, e] : m.entries()) mins[s] = e;
      first = false;
      continue;
    }
    // Symbols absent from a term have exponent 0 there.
    for (auto& [s, e] : mins) e = std::min(e, m.exponent(s));
    for (const auto& [s, e] : m.entries())
      if (!mins.count(s)) mins[s] = std::min(e, 0);
  }
  MonomialBuilder b;
  for (const auto& [s, e] : mins) b.mul(s, e);
  return std::move(b).build();
}

int LaurentPoly::degree_in(SymId s) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.exponent(s));
  return d;
}

int LaurentPoly::min_degree_in(SymId s) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::min(d, m.exponent(s));
  return d;
}

bool LaurentPoly::depends_on(SymId s) const {
  for (const auto& [m, c] : t_)
    if (m.exponent(s) != 0) return true;
  return false;
}

std::vector<SymId> LaurentPoly::variables() const {
  std::vector<SymId> v;
  for (const auto& [m, c] : t_)
    for (const auto& [s, e] : m.entries())
      if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  std::sort(v.begin(), v.end(), sym_less);
  return v;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(SymId s) const {
  std::map<int, LaurentPoly> out;
  for (const auto& [m, c] : t_) {
    int e = m.exponent(s);
    out[e].add_term(m * Monomial(Symbol(s), e).inverse(), c);
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_poly(
    const std::map<SymId, LaurentPoly>& assignment) const {
  // Cache image powers: (symbol, exponent) -> image^exponent.
  std::map<std::pair<SymId, int>, LaurentPoly> powers;
  auto image_pow = [&](SymId s, int e) -> const LaurentPoly& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const LaurentPoly& img = assignment.at(s);
    LaurentPoly value;
    if (e >= 0) {
      value = img.pow(e);
    } else {
      // Only single-term images are invertible inside the polynomial ring.
      if (!img.is_single_term())
        throw pole_error("negative power of a non-invertible image of '" +
                         SymbolTable::instance().name(s) + "'");
      const auto& [m, c] = img.terms().front();
      Rational cp = 1;
      for (int i = 0; i < -e; ++i) cp *= c;
      value = LaurentPoly::term(m.pow(e), Rational(1) / cp);
    }
    return powers.emplace(key, std::move(value)).first->second;
  };
  LaurentPoly out;
  for (const auto& [m, c] : t_) {
    LaurentPoly termval = LaurentPoly::constant(c);
    MonomialBuilder untouched;
    for (const auto& [s, e] : m.entries()) {
      if (assignment.count(s)) {
        termval = termval * image_pow(s, e);
      } else {
        untouched.mul(s, e);
      }
    }
    out += termval.times_monomial(std::move(untouched).build());
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rational& c = it->second;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (it->first.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += it->first.to_string();
    }
  }
  return s;
}

namespace {

/// Componentwise exponent comparison; sound once both monomials have
/// nonnegative exponents.
bool monomial_divides(const Monomial& b, const Monomial& r) {
  for (const auto& [s, e] : b.entries())
    if (e > r.exponent(s)) return false;
  return true;
}

}  // namespace

void LaurentPoly::sub_term_times(const Monomial& tm, const Rational& tc,
                                 const LaurentPoly& b) {
  TermVec out;
  out.reserve(t_.size() + b.t_.size());
  auto a = t_.begin();
  auto s = b.t_.begin();
  Monomial sm;  // current subtrahend monomial
  Rational sc;
  bool have_s = false;
  auto advance_s = [&] {
    if (s == b.t_.end()) {
      have_s = false;
      return;
    }
    sm = s->first * tm;
    sc = s->second * tc;
    ++s;
    have_s = true;
  };
  advance_s();
  while (a != t_.end() && have_s) {
    const auto ord = a->first.cmp(sm);
    if (ord == std::strong_ordering::less) {
      out.push_back(std::move(*a));
      ++a;
    } else if (ord == std::strong_ordering::greater) {
      out.emplace_back(sm, -sc);
      advance_s();
    } else {
      Rational c = a->second - sc;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      advance_s();
    }
  }
  for (; a != t_.end(); ++a) out.push_back(std::move(*a));
  while (have_s) {
    out.emplace_back(sm, -sc);
    advance_s();
  }
  t_ = std::move(out);
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw division_by_zero_error("exact_div by zero");
  if (a.is_zero()) return LaurentPoly::zero();
  if (b.is_single_term()) {
    const auto& [mb, cb] = b.terms().front();
    return a.times_monomial(mb.inverse()).scaled(Rational(1) / cb);
  }
  // Shift both operands to content-free genuine polynomials. There grlex
  // is a well-order, so leading-term division terminates, and a leading
  // term not divisible by LT(b) proves the quotient is not polynomial --
  // which by the valuation argument means b does not divide a at all.
  const Monomial ca = a.content_monomial();
  const Monomial cb = b.content_monomial();
  LaurentPoly r = a.times_monomial(ca.inverse());
  const LaurentPoly bp = b.times_monomial(cb.inverse());
  LaurentPoly::TermVec quotient;  // generated in strictly decreasing order
  const auto& [lm_b, lc_b] = bp.leading_term();
  while (!r.is_zero()) {
    const auto& [lm_r, lc_r] = r.leading_term();
    if (!monomial_divides(lm_b, lm_r))
      throw inexact_division_error("exact_div: not a multiple");
    Monomial tm = lm_r / lm_b;
    Rational tc = lc_r / lc_b;
    r.sub_term_times(tm, tc, bp);
    quotient.emplace_back(std::move(tm), std::move(tc));
  }
  std::reverse(quotient.begin(), quotient.end());
  LaurentPoly q;
  for (auto& t : quotient) q.t_.push_back(std::move(t));
  return q.times_monomial(ca / cb);
}

}  // namespace gkp
