#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "gkp/symbol.hpp"

namespace gkp {

/// A Laurent monomial: a finite map symbol -> integer exponent. Zero
/// exponents are never stored; the entries are kept sorted by symbol
/// name so that comparison and merging are single passes. Entries live
/// inline up to four variables, which covers the hot paths.
class Monomial {
 public:
  using Entry = std::pair<SymId, int>;
  using EntryVec = boost::container::small_vector<Entry, 4>;

  Monomial() = default;
  Monomial(Symbol s, int exponent);

  static const Monomial& one();

  bool is_one() const { return e_.empty(); }
  int total_degree() const { return degree_; }
  int exponent(SymId s) const;
  const EntryVec& entries() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(e_ == o.e_); }

  /// Graded lexicographic comparison: total degree first, then the
  /// exponent vectors lexicographically with variables in name order.
  /// This is a group order on exponent vectors, which exact division
  /// relies on.
  std::strong_ordering cmp(const Monomial& o) const;

  std::string to_string() const;

 private:
  EntryVec e_;
  int degree_ = 0;
  friend class MonomialBuilder;
};

struct MonomialGrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.cmp(b) == std::strong_ordering::less;
  }
};

/// Assembles a monomial from unsorted (symbol, exponent) pairs.
class MonomialBuilder {
 public:
  void mul(SymId s, int exponent);
  Monomial build() &&;

 private:
  Monomial::EntryVec e_;
};

}  // namespace gkp
