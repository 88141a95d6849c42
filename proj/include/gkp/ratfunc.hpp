#pragma once

#include <map>
#include <optional>
#include <string>

#include "gkp/laurent.hpp"

namespace gkp {

/// Quotient of two Laurent polynomials. The representation is normalized
/// deterministically (joint monomial content removed, denominator made
/// monic in graded-lex order) but is not reduced by polynomial GCD;
/// equality is decided exactly by cross-multiplication, and the exact
/// quotient is taken on demand by as_polynomial().
class RatFunc {
 public:
  RatFunc() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  RatFunc(LaurentPoly num);  // NOLINT: value conversion is the point
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc constant(Rational c) {
    return RatFunc(LaurentPoly::constant(std::move(c)));
  }
  static RatFunc variable(Symbol s) { return RatFunc(LaurentPoly::variable(s)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator normalized away entirely.
  bool is_polynomial_form() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  /// Any integer exponent; zero to a negative power throws.
  RatFunc pow(int k) const;

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Exact quotient num/den. Throws inexact_division_error when the value
  /// is not a Laurent polynomial.
  LaurentPoly as_polynomial() const;
  std::optional<LaurentPoly> try_polynomial() const;

  bool is_constant() const;
  Rational constant_value() const;

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

/// Substitution assignment: symbol -> rational-function image.
using SubstMap = std::map<SymId, RatFunc>;

/// Ring-homomorphism substitution. Throws pole_error when an image makes
/// a denominator (or an inverted variable) vanish.
RatFunc substitute(const LaurentPoly& p, const SubstMap& assignment);
RatFunc substitute(const RatFunc& f, const SubstMap& assignment);

}  // namespace gkp
