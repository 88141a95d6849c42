#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkp/pushforward.hpp"
#include "gkp/subsets.hpp"

using namespace gkp;

namespace {

RatFunc rat_const(long n, long d = 1) {
  return RatFunc(LaurentPoly::constant(frac(n, d)));
}

}  // namespace

TEST_CASE("parameter validation") {
  PushforwardParams ok{2, 2, 1, 0, Partition({1}), Partition()};
  CHECK_NOTHROW(ok.validate());
  PushforwardParams bad_k{2, 2, 3, 0, Partition(), Partition()};
  CHECK_THROWS_AS(bad_k.validate(), argument_error);
  PushforwardParams bad_l{2, 2, 1, 2, Partition(), Partition()};
  CHECK_THROWS_AS(bad_l.validate(), argument_error);
  PushforwardParams big_lambda{2, 2, 1, 0, Partition({2}), Partition()};
  CHECK_THROWS_AS(big_lambda.validate(), argument_error);
}

TEST_CASE("class symmetry is enforced") {
  std::vector<Symbol> sig = sigma_symbols(2);
  std::vector<Symbol> ome = omega_symbols(0);
  CHECK_THROWS_AS(
      GrothClassExpr(LaurentPoly::variable(sig[0]), sig, ome),
      argument_error);
  CHECK_NOTHROW(GrothClassExpr(
      LaurentPoly::variable(sig[0]) + LaurentPoly::variable(sig[1]), sig,
      ome));
}

TEST_CASE("localization at the boundary ranks") {
  // k = 0: a single empty-subset term.
  std::vector<Symbol> ome = omega_symbols(2);
  LaurentPoly f = LaurentPoly::variable(ome[0], -1) *
                      LaurentPoly::variable(ome[1], -1) +
                  LaurentPoly::one();
  GrothClassExpr cls0(f, {}, ome);
  AlphaAssignment a = AlphaAssignment::rationals({Rational(2), frac(1, 3)});
  RatFunc expect0(LaurentPoly::constant(frac(1, 2) * Rational(3) + 1));
  CHECK(localization_pushforward(cls0, a) == expect0);

  // k = n: the base space itself.
  std::vector<Symbol> sig = sigma_symbols(2);
  LaurentPoly g = LaurentPoly::variable(sig[0]) * LaurentPoly::variable(sig[1]);
  GrothClassExpr clsn(g, sig, {});
  CHECK(localization_pushforward(clsn, a) == rat_const(2, 3));

  CHECK_THROWS_AS(AlphaAssignment::rationals({Rational(2), Rational(2)}),
                  distinctness_error);
}

TEST_CASE("desk instance: both routes give one third") {
  PushforwardParams p{2, 2, 1, 0, Partition({1}), Partition()};
  GrothClassExpr g = class_g(p);
  AlphaAssignment a = AlphaAssignment::rationals({Rational(2), Rational(3)});
  CHECK(localization_pushforward(g, a) == rat_const(1, 3));
  CHECK(residue_pushforward(g, a) == rat_const(1, 3));
  // And the closed form target agrees.
  LaurentPoly target = skew_multi(Partition({1, 1}), Partition(), a.values);
  CHECK(target == LaurentPoly::constant(frac(1, 3)));
}

TEST_CASE("class_g at l = 0 is the product class") {
  PushforwardParams p{3, 2, 1, 0, Partition({2}), Partition()};
  GrothClassExpr g = class_g(p);
  std::vector<Symbol> sig = sigma_symbols(1);
  std::vector<Symbol> ome = omega_symbols(1);
  LaurentPoly expect =
      skew_multi(Partition({2}), Partition(), to_params(sig)) *
      skew_multi(Partition({3}), Partition(), to_params(ome));
  CHECK(g.poly() == expect);
}

TEST_CASE("class_g matches the mixed partition function") {
  PushforwardParams p{3, 2, 1, 1, Partition({1, 1}), Partition({1})};
  GrothClassExpr g = class_g(p);
  PositionSeq x = partition_to_positions(p.mu, p.l, p.m);
  PositionSeq y = partition_to_positions(p.lambda, p.l + p.k, p.m);
  std::vector<SpectralParam> params;
  for (const Symbol& s : g.sigma()) params.push_back(SpectralParam::symbol(s));
  for (const Symbol& s : g.omega()) params.push_back(SpectralParam::symbol(s));
  CHECK(g.poly() == partition_function(PartitionFunctionKind::ZBD, p.m, p.n,
                                       p.k, x, y, params));
}

TEST_CASE("pushforward identity on a small symbolic sweep") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int k = 0; k <= std::min(n, m); ++k)
        for (int l = 0; l <= m - k; ++l)
          for (const Partition& lam : enumerate_in_box(l + k, m - k - l))
            for (const Partition& mu : enumerate_in_box(l, m - l)) {
              PushforwardParams p{m, n, k, l, lam, mu};
              CheckOutcome r = verify_pushforward(p, Mode::Symbolic, 1, 1);
              CAPTURE(p.to_string());
              CHECK(r.ok);
            }
}

TEST_CASE("pushforward identity in sample mode") {
  PushforwardParams p{3, 2, 1, 1, Partition({1, 1}), Partition({1})};
  CheckOutcome r = verify_pushforward(p, Mode::Sample, 20, 99);
  CHECK(r.ok);
}

TEST_CASE("operator expansion of ZDB") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int k = 0; k <= std::min(n, m); ++k)
        for (int l = 0; l <= m - k; ++l)
          for (const Partition& lam : enumerate_in_box(l + k, m - k - l))
            for (const Partition& mu : enumerate_in_box(l, m - l)) {
              PushforwardParams p{m, n, k, l, lam, mu};
              CheckOutcome r = verify_operator_expansion(p);
              CAPTURE(p.to_string());
              CHECK(r.ok);
            }
}

TEST_CASE("subset-sum identity") {
  // Hand expansion at lambda=(1), m=2, k=1, n=2: the left side is
  // G_{(1,1)} = z1 z2 and the two-subset sum telescopes to the same.
  CheckOutcome hand = guo_sun_check(Partition({1}), 2, 1, 2, Mode::Symbolic,
                                    1, 1);
  CHECK(hand.ok);

  // Empty rectangle: both sides are 1.
  CheckOutcome unit = guo_sun_check(Partition(), 2, 2, 2, Mode::Symbolic, 1,
                                    1);
  CHECK(unit.ok);

  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= std::min(n, m); ++k)
        for (const Partition& lam : enumerate_in_box(k, m - k)) {
          CheckOutcome r =
              guo_sun_check(lam, m, k, n, Mode::Symbolic, 1, 1);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(lam.to_string());
          CHECK(r.ok);
        }

  // Sample mode agrees too.
  CheckOutcome sampled =
      guo_sun_check(Partition({1}), 3, 1, 2, Mode::Sample, 10, 5);
  CHECK(sampled.ok);
}

TEST_CASE("printed rectangle fails and is detected") {
  CheckOutcome r = guo_sun_printed_form(Partition(), 1, 1, 2);
  CHECK_FALSE(r.ok);
  // The corrected rectangle on the same parameters holds.
  CHECK(guo_sun_check(Partition(), 1, 1, 2, Mode::Symbolic, 1, 1).ok);
}

TEST_CASE("residues agree with localization on random classes") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 12; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int k = static_cast<int>(rng() % (n + 1));
    auto pick = [&rng](int rows, int cols) {
      auto all = enumerate_in_box(rows, cols);
      return all[rng() % all.size()];
    };
    const Partition nu = pick(k, 2), rho = pick(n - k, 2);
    std::vector<Symbol> sig = sigma_symbols(k), ome = omega_symbols(n - k);
    LaurentPoly f = skew_multi(nu, Partition(), to_params(sig)) *
                    skew_multi(rho, Partition(), to_params(ome));
    GrothClassExpr cls(std::move(f), sig, ome);
    AlphaAssignment a =
        AlphaAssignment::rationals(draw_distinct_rationals(rng, n));
    CAPTURE(n);
    CAPTURE(k);
    CHECK(residue_pushforward(cls, a) == localization_pushforward(cls, a));
  }
}

TEST_CASE("unit integral at the pinned point") {
  // n = 2, k = 1, alpha = (2, 3): the normalization integral is exactly 1.
  std::vector<Symbol> sig = sigma_symbols(1), ome = omega_symbols(1);
  LaurentPoly f =
      (LaurentPoly::one() - LaurentPoly::variable(ome[0], -1)).pow(1);
  GrothClassExpr cls(f, sig, ome);
  AlphaAssignment a = AlphaAssignment::rationals({Rational(2), Rational(3)});
  CHECK(residue_pushforward(cls, a) == rat_const(1));
}

TEST_CASE("rank-one quotient pushforward hits five sixths") {
  std::vector<Symbol> sig = sigma_symbols(1), ome = omega_symbols(1);
  LaurentPoly f =
      (LaurentPoly::one() - LaurentPoly::variable(ome[0], -1)).pow(2);
  GrothClassExpr cls(f, sig, ome);
  AlphaAssignment a = AlphaAssignment::rationals({Rational(2), Rational(3)});
  CHECK(localization_pushforward(cls, a) == rat_const(5, 6));
  LaurentPoly target = skew_multi(Partition({1}), Partition(), a.values);
  CHECK(target == LaurentPoly::constant(frac(5, 6)));
}

TEST_CASE("special case dispatch") {
  SpecialCaseArgs args;
  args.m = 2;
  args.n = 2;
  args.k = 1;
  args.lambda = Partition({1});
  CHECK(special_case_suite(SpecialCase::PushSpecialization, args).ok);
  CHECK(special_case_suite(SpecialCase::BuchGrassmannProduct, args).ok);
  SpecialCaseArgs line;
  line.m = 2;
  line.n = 2;
  CHECK(special_case_suite(SpecialCase::DualProjectiveLine, line).ok);
  SpecialCaseArgs unit;
  unit.m = 1;
  unit.n = 2;
  unit.k = 1;
  unit.trials = 2;
  unit.seed = 5;
  CHECK(special_case_suite(SpecialCase::ResidueUnit, unit).ok);
}
