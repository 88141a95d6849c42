#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkp/monomial.hpp"
#include "gkp/rational.hpp"

namespace gkp {

/// A multivariate Laurent polynomial over the exact rationals: a flat
/// vector of (monomial, nonzero coefficient) terms kept in ascending
/// graded-lex order. The sorted form is itself the canonical form, so
/// equality is plain term-list equality. Values are immutable in spirit:
/// every operation returns a fresh polynomial and nothing here mutates
/// shared state, so instances are safe to share across threads.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Rational>;
  using TermVec = std::vector<Term>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly constant(Rational c);
  static LaurentPoly variable(Symbol s, int exponent = 1);
  static LaurentPoly term(Monomial m, Rational c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Requires is_constant().
  Rational constant_value() const;
  /// Nonzero polynomial consisting of a single term?
  bool is_single_term() const { return t_.size() == 1; }

  std::size_t term_count() const { return t_.size(); }
  const TermVec& terms() const { return t_; }

  /// Largest / smallest term in graded-lex order. Requires nonzero.
  const Term& leading_term() const;
  const Term& trailing_term() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly times_monomial(const Monomial& m) const;
  /// Nonnegative exponent only; RatFunc::pow accepts any integer.
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return !(t_ == o.t_); }

  /// Per-variable minimum exponent over all terms, as a monomial.
  /// Dividing by it shifts the polynomial to have no negative exponents.
  Monomial content_monomial() const;

  int degree_in(SymId s) const;
  int min_degree_in(SymId s) const;
  bool depends_on(SymId s) const;
  std::vector<SymId> variables() const;

  /// View as a polynomial in s: exponent of s -> coefficient polynomial.
  std::map<int, LaurentPoly> coefficients_in(SymId s) const;

  /// Substitute polynomial images. Negative exponents require the image
  /// to be a single nonzero term (so its inverse is again a polynomial);
  /// otherwise this throws and the rational-function substitute applies.
  LaurentPoly substitute_poly(
      const std::map<SymId, LaurentPoly>& assignment) const;

  /// Canonical printed form: terms in decreasing graded-lex order.
  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  /// Sorts and folds an arbitrary term list into canonical form.
  static LaurentPoly from_unsorted(TermVec terms);
  /// In-place r -= (tm, tc) * b by a single linear merge; the workhorse
  /// of exact division.
  void sub_term_times(const Monomial& tm, const Rational& tc,
                      const LaurentPoly& b);
  TermVec t_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

/// Exact quotient a / b. Throws inexact_division_error when b does not
/// divide a, division_by_zero_error when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gkp
