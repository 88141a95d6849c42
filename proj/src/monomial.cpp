#include "gkp/monomial.hpp"

#include <algorithm>

namespace gkp {

Monomial::Monomial(Symbol s, int exponent) {
  if (exponent != 0) {
    e_.push_back({s.id(), exponent});
    degree_ = exponent;
  }
}

const Monomial& Monomial::one() {
  static const Monomial m;
  return m;
}

int Monomial::exponent(SymId s) const {
  for (const auto& [id, e] : e_)
    if (id == s) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.e_.empty()) return *this;
  if (e_.empty()) return o;
  const std::uint32_t* rk = SymbolTable::instance().rank_data();
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), b = o.e_.begin();
  while (a != e_.end() && b != o.e_.end()) {
    if (a->first == b->first) {
      int e = a->second + b->second;
      if (e != 0) r.e_.push_back({a->first, e});
      ++a;
      ++b;
    } else if (rk[a->first] < rk[b->first]) {
      r.e_.push_back(*a++);
    } else {
      r.e_.push_back(*b++);
    }
  }
  r.e_.insert(r.e_.end(), a, e_.end());
  r.e_.insert(r.e_.end(), b, o.e_.end());
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  r.e_.reserve(e_.size());
  for (const auto& [id, e] : e_) r.e_.push_back({id, -e});
  r.degree_ = -degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  return *this * o.inverse();
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  r.e_.reserve(e_.size());
  for (const auto& [id, e] : e_) r.e_.push_back({id, e * k});
  r.degree_ = degree_ * k;
  return r;
}

std::strong_ordering Monomial::cmp(const Monomial& o) const {
  if (degree_ != o.degree_)
    return degree_ < o.degree_ ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  const std::uint32_t* rk = SymbolTable::instance().rank_data();
  auto a = e_.begin(), b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    // A missing entry is exponent 0 on that symbol.
    int ea, eb;
    std::uint32_t ra = a != e_.end() ? rk[a->first] : ~0u;
    std::uint32_t rb = b != o.e_.end() ? rk[b->first] : ~0u;
    if (ra == rb) {
      ea = a->second;
      eb = b->second;
      ++a;
      ++b;
    } else if (ra < rb) {
      ea = a->second;
      eb = 0;
      ++a;
    } else {
      ea = 0;
      eb = b->second;
      ++b;
    }
    if (ea != eb)
      return ea < eb ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& [id, e] : e_) {
    if (!s.empty()) s += "*";
    s += SymbolTable::instance().name(id);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

void MonomialBuilder::mul(SymId s, int exponent) {
  if (exponent != 0) e_.push_back({s, exponent});
}

Monomial MonomialBuilder::build() && {
  std::sort(e_.begin(), e_.end(), [](const auto& a, const auto& b) {
    return sym_less(a.first, b.first);
  });
  Monomial m;
  for (const auto& [id, e] : e_) {
    if (!m.e_.empty() && m.e_.back().first == id) {
      m.e_.back().second += e;
      if (m.e_.back().second == 0) m.e_.pop_back();
    } else {
      m.e_.push_back({id, e});
    }
    m.degree_ += e;
  }
  return m;
}

}  // namespace gkp
