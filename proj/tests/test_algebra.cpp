#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkp/matrix.hpp"
#include "gkp/ratfunc.hpp"
#include "gkp/symfunc.hpp"

using namespace gkp;

namespace {

LaurentPoly var(const char* name, int e = 1) {
  return LaurentPoly::variable(sym(name), e);
}

/// Random Laurent polynomial over {x, y, z}: up to five terms, exponents
/// in [-3, 3], small rational coefficients.
LaurentPoly random_poly(std::mt19937_64& rng, bool nonzero = false) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coef(-9, 9),
      den(1, 4);
  LaurentPoly p;
  for (int t = nterms(rng); t >= 0; --t) {
    MonomialBuilder b;
    for (const char* nm : names) b.mul(sym(nm).id(), expo(rng) / 2);
    int c = coef(rng);
    if (c == 0) continue;
    p += LaurentPoly::term(std::move(b).build(), frac(c, den(rng)));
  }
  if (nonzero && p.is_zero()) return LaurentPoly::one();
  return p;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 30), den(1, 7), sign(0, 1);
  Rational r = frac(num(rng), den(rng));
  return sign(rng) ? r : -r;
}

}  // namespace

TEST_CASE("ring arithmetic identities") {
  LaurentPoly u = var("u");
  LaurentPoly uinv = var("u", -1);
  CHECK((LaurentPoly::one() - uinv) * u == u - LaurentPoly::one());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(p + LaurentPoly::zero() == p);
  }

  LaurentPoly w = var("w");
  CHECK((w * var("u", -1)) * (u * var("w", -1)) == LaurentPoly::one());
}

TEST_CASE("ratfunc powers and zero division") {
  RatFunc half(LaurentPoly::constant(frac(1, 2)));
  CHECK(half.pow(-2) == RatFunc(LaurentPoly::constant(Rational(4))));
  RatFunc z;
  CHECK_THROWS_AS(z.pow(-1), division_by_zero_error);
  CHECK_THROWS_AS(half / z, division_by_zero_error);

  RatFunc f(var("x"), LaurentPoly::one() - var("x"));
  CHECK(f.pow(2) * f.pow(-2) == RatFunc(LaurentPoly::one()));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng),
                c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  LaurentPoly z1 = var("z1"), z2 = var("z2");
  CHECK(exact_div(z1 * z1 - z2 * z2, z1 - z2) == z1 + z2);

  // Numerator of the empty-shape determinant form at n = 2, expanded by
  // hand: z1(1-z2) - z2(1-z1) = z1 - z2; the Vandermonde quotient is 1.
  LaurentPoly det = z1 * (LaurentPoly::one() - z2) -
                    z2 * (LaurentPoly::one() - z1);
  CHECK(exact_div(det, z1 - z2) == LaurentPoly::one());

  CHECK_THROWS_AS(exact_div(z1 + LaurentPoly::one(), z1 - z2),
                  inexact_division_error);
  CHECK_THROWS_AS(exact_div(z1, LaurentPoly::zero()), division_by_zero_error);
}

TEST_CASE("exact division of random products") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    LaurentPoly a = random_poly(rng, true), b = random_poly(rng, true);
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("substitution") {
  LaurentPoly z = var("z");
  LaurentPoly u_inv = var("u", -1);
  SubstMap to_u{{sym("z").id(), RatFunc(LaurentPoly::one() - u_inv)}};
  RatFunc out = substitute(z * z, to_u);
  LaurentPoly expect = LaurentPoly::one() - u_inv.scaled(Rational(2)) +
                       var("u", -2);
  CHECK(out == RatFunc(expect));

  SubstMap u_two{{sym("u").id(), RatFunc::constant(Rational(2))}};
  CHECK(substitute(LaurentPoly::one() - u_inv, u_two) ==
        RatFunc::constant(frac(1, 2)));

  SubstMap identity{{sym("z").id(), RatFunc::variable(sym("z"))}};
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(substitute(p, identity) == RatFunc(p));
  }

  // Inverting a vanishing image is a pole.
  SubstMap zero_image{{sym("z").id(), RatFunc::constant(Rational(0))}};
  CHECK_THROWS_AS(substitute(var("z", -1), zero_image), pole_error);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    SubstMap assign;
    for (const char* nm : {"x", "y", "z"})
      assign.emplace(sym(nm).id(),
                     RatFunc::constant(random_nonzero_rational(rng)));
    CHECK(substitute(a * b, assign) ==
          substitute(a, assign) * substitute(b, assign));
    CHECK(substitute(a + b, assign) ==
          substitute(a, assign) + substitute(b, assign));
  }
}

namespace {

/// Independent Laplace expansion along the first row, any dimension.
LaurentPoly det_oracle(const RingMatrix& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  LaurentPoly acc;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i) sub_cols.push_back(cols[j]);
    LaurentPoly term =
        m.at(rows[0], cols[i]) * det_oracle(m, sub_rows, sub_cols);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

LaurentPoly det_oracle(const RingMatrix& m) {
  std::vector<std::size_t> idx(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) idx[i] = i;
  return det_oracle(m, idx, idx);
}

RingMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RingMatrix m(n);
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly e;
      for (int t = 0; t < 2; ++t) {
        MonomialBuilder b;
        b.mul(sym("x").id(), expo(rng));
        b.mul(sym("y").id(), expo(rng));
        e += LaurentPoly::term(std::move(b).build(), Rational(coef(rng)));
      }
      m.at(i, j) = e;
    }
  return m;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(determinant(RingMatrix::identity(3)) == LaurentPoly::one());

  RingMatrix m2(2);
  m2.at(0, 0) = var("a");
  m2.at(0, 1) = var("b");
  m2.at(1, 0) = var("c");
  m2.at(1, 1) = var("d");
  CHECK(determinant(m2) == var("a") * var("d") - var("b") * var("c"));

  RingMatrix v(2);
  v.at(0, 0) = LaurentPoly::one();
  v.at(0, 1) = var("z1");
  v.at(1, 0) = LaurentPoly::one();
  v.at(1, 1) = var("z2");
  CHECK(determinant(v) == var("z2") - var("z1"));
}

TEST_CASE("determinant algorithms agree and are multiplicative") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 3; ++t) {
      RingMatrix m = random_matrix(rng, n);
      CHECK(determinant(m) == det_oracle(m));
    }
  for (int t = 0; t < 5; ++t) {
    RingMatrix a = random_matrix(rng, 3), b = random_matrix(rng, 3);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("symmetric polynomials") {
  std::vector<Symbol> z2{sym("z1"), sym("z2")};
  CHECK(elementary_symmetric(z2, 1) == var("z1") + var("z2"));
  CHECK(complete_symmetric(z2, 2) ==
        var("z1") * var("z1") + var("z1") * var("z2") + var("z2") * var("z2"));
  std::vector<Symbol> z1{sym("z1")};
  CHECK(complete_symmetric(z1, -1).is_zero());
  CHECK(elementary_symmetric(z2, 3).is_zero());
  CHECK(elementary_symmetric(z2, 0).is_one());
  CHECK(symmetric_poly(SymKind::Elementary, z2, 1) ==
        elementary_symmetric(z2, 1));
}

TEST_CASE("generalized binomials") {
  CHECK(gen_binomial(3, 2) == Rational(3));
  CHECK(gen_binomial(-1, 2) == Rational(1));
  for (long l = 1; l <= 5; ++l) CHECK(gen_binomial(0, l) == 0);
  CHECK_THROWS_AS(gen_binomial(2, -1), domain_error);
}

TEST_CASE("twisted complete sums") {
  std::vector<Symbol> z{sym("z1")};
  for (int p = 0; p <= 3; ++p)
    CHECK(h_twisted(p, 0, z) == complete_symmetric(z, p));
  CHECK(h_twisted(1, 1, z) == var("z1") - var("z1") * var("z1"));
  CHECK(h_twisted(-4, 2, z).is_zero());
}

TEST_CASE("canonical equality matches rational sampling") {
  // Equal canonical forms evaluate identically at random points; a
  // perturbed polynomial disagrees somewhere.
  std::mt19937_64 rng(101);
  LaurentPoly p = random_poly(rng, true);
  LaurentPoly q = (p + p).scaled(frac(1, 2));
  CHECK(p == q);
  LaurentPoly perturbed = p + LaurentPoly::term(Monomial(sym("x"), 2),
                                                frac(1, 7));
  bool disagreed = false;
  for (int t = 0; t < 20; ++t) {
    SubstMap assign;
    for (const char* nm : {"x", "y", "z"})
      assign.emplace(sym(nm).id(),
                     RatFunc::constant(random_nonzero_rational(rng)));
    CHECK(substitute(p, assign) == substitute(q, assign));
    if (substitute(p, assign) != substitute(perturbed, assign))
      disagreed = true;
  }
  CHECK(disagreed);
}

TEST_CASE("ratfunc cross-multiplication equality") {
  LaurentPoly x = var("x");
  RatFunc a(x * x - LaurentPoly::one(), x - LaurentPoly::one());
  RatFunc b(x + LaurentPoly::one());
  CHECK(a == b);
  CHECK(a.as_polynomial() == x + LaurentPoly::one());
  RatFunc c(LaurentPoly::one(), x - LaurentPoly::one());
  CHECK(a != c);
  CHECK_FALSE(c.try_polynomial().has_value());
}
