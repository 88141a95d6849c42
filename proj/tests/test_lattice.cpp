#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gkp/lattice.hpp"
#include "gkp/pushforward.hpp"
#include "gkp/subsets.hpp"

using namespace gkp;

namespace {

SpectralParam usym(const char* n) { return SpectralParam::symbol(sym(n)); }

LaurentPoly one_minus_inv(const char* n) {
  return LaurentPoly::one() - LaurentPoly::variable(sym(n), -1);
}

/// Brute-force monodromy element: the explicit sum over auxiliary bond
/// configurations, independent of the sector sweep.
LaurentPoly op_elem_bruteforce(OpKind kind, const SpectralParam& u,
                               const std::vector<int>& eps,
                               const std::vector<int>& del) {
  const int m = static_cast<int>(eps.size());
  int aux_in = (kind == OpKind::B || kind == OpKind::D) ? 1 : 0;
  int aux_out = (kind == OpKind::C || kind == OpKind::D) ? 1 : 0;
  const SpectralParam w1 = SpectralParam::rational(Rational(1));
  LaurentPoly acc;
  for (long mask = 0; mask < (1L << (m - 1)); ++mask) {
    std::vector<int> g(m + 1);
    g[0] = aux_in;
    for (int j = 1; j < m; ++j) g[j] = (mask >> (j - 1)) & 1;
    g[m] = aux_out;
    LaurentPoly term = LaurentPoly::one();
    for (int j = 1; j <= m; ++j) {
      term = term * r_elem(g[j - 1], eps[j - 1], g[j], del[j - 1], u, w1);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

std::vector<int> bits_of(const PositionSeq& s) {
  std::vector<int> bits(s.chain_length, 0);
  for (int p : s.pos) bits[p - 1] = 1;
  return bits;
}

/// Word contraction through complete sums over intermediate basis states.
LaurentPoly matrix_element_bruteforce(const PositionSeq& bra,
                                      const OperatorWord& word,
                                      const PositionSeq& ket) {
  const int m = ket.chain_length;
  std::vector<std::pair<std::vector<int>, LaurentPoly>> state{
      {bits_of(ket), LaurentPoly::one()}};
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    std::map<std::vector<int>, LaurentPoly> next;
    for (long mask = 0; mask < (1L << m); ++mask) {
      std::vector<int> del(m);
      for (int j = 0; j < m; ++j) del[j] = (mask >> j) & 1;
      for (const auto& [eps, coeff] : state) {
        LaurentPoly e = op_elem_bruteforce(it->kind, it->param, eps, del);
        if (e.is_zero()) continue;
        auto [slot, inserted] = next.emplace(del, e * coeff);
        if (!inserted) slot->second += e * coeff;
      }
    }
    state.assign(next.begin(), next.end());
  }
  const std::vector<int> want = bits_of(bra);
  for (const auto& [bits, coeff] : state)
    if (bits == want) return coeff;
  return LaurentPoly::zero();
}

}  // namespace

TEST_CASE("five-vertex weights") {
  SpectralParam u = usym("u"), w = usym("w");
  LaurentPoly w_over_u =
      LaurentPoly::variable(sym("w")) * LaurentPoly::variable(sym("u"), -1);
  CHECK(r_elem(0, 0, 0, 0, u, w).is_one());
  CHECK(r_elem(1, 1, 1, 1, u, w).is_one());
  CHECK(r_elem(1, 0, 0, 1, u, w).is_one());
  CHECK(r_elem(0, 1, 1, 0, u, w) == w_over_u);
  CHECK(r_elem(1, 0, 1, 0, u, w) == LaurentPoly::one() - w_over_u);
  CHECK(r_elem(0, 1, 0, 1, u, w).is_zero());
  // Ice rule: occupation must balance.
  CHECK(r_elem(0, 0, 1, 1, u, w).is_zero());
  CHECK(r_elem(1, 1, 0, 0, u, w).is_zero());
  for (int e1 : {0, 1})
    for (int e2 : {0, 1})
      for (int d1 : {0, 1})
        for (int d2 : {0, 1})
          if (e1 + e2 != d1 + d2)
            CHECK(r_elem(e1, e2, d1, d2, u, w).is_zero());
}

TEST_CASE("single-site operators on the vacuum") {
  SpectralParam u = usym("u");
  SectorVector vac = SectorVector::vacuum(1);
  SectorVector b = apply_operator(vac, OpKind::B, u);
  CHECK(b.particle_count() == 1);
  CHECK(b.amplitude(PositionSeq({1}, 1)).is_one());

  SectorVector d = apply_operator(vac, OpKind::D, u);
  CHECK(d.particle_count() == 0);
  CHECK(d.amplitude(PositionSeq({}, 1)) == one_minus_inv("u"));
}

TEST_CASE("sector bookkeeping") {
  SpectralParam u = usym("u");
  SectorVector v = SectorVector::vacuum(2);
  v = apply_operator(v, OpKind::B, usym("u1"));
  v = apply_operator(v, OpKind::B, usym("u2"));
  CHECK(v.particle_count() == 2);
  CHECK_THROWS_AS(apply_operator(v, OpKind::B, u), sector_error);
  CHECK_THROWS_AS(apply_operator(SectorVector::vacuum(2), OpKind::C, u),
                  sector_error);
}

TEST_CASE("ice rule conservation across sectors") {
  SpectralParam u = usym("u");
  for (int m = 1; m <= 6; ++m)
    for (int l = 0; l <= m; ++l)
      for (const auto& s : k_subsets(m, l)) {
        std::vector<int> pos(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) pos[i] = s[i] + 1;
        SectorVector v = SectorVector::basis(PositionSeq(pos, m));
        if (l < m) {
          SectorVector bv = apply_operator(v, OpKind::B, u);
          CHECK(bv.particle_count() == l + 1);
          for (const auto& [key, amp] : bv.amplitudes())
            CHECK(static_cast<int>(key.count()) == l + 1);
        }
        SectorVector dv = apply_operator(v, OpKind::D, u);
        CHECK(dv.particle_count() == l);
        for (const auto& [key, amp] : dv.amplitudes())
          CHECK(static_cast<int>(key.count()) == l);
      }
}

TEST_CASE("single B-operator matrix elements") {
  SpectralParam u = usym("u");
  OperatorWord word{{{OpKind::B, u}}};
  LaurentPoly inv = LaurentPoly::variable(sym("u"), -1);

  LaurentPoly fig = matrix_element(PositionSeq({2, 5, 6, 9}, 9), word,
                                   PositionSeq({3, 5, 7}, 9));
  CHECK(fig == one_minus_inv("u").pow(3) * inv.pow(2));

  CHECK(matrix_element(PositionSeq({1, 3}, 3), word, PositionSeq({2}, 3)) ==
        inv);

  CHECK(matrix_element(PositionSeq({1}, 3), word, PositionSeq({2}, 3))
            .is_zero());
}

TEST_CASE("partition function families") {
  std::vector<SpectralParam> u{usym("u")};
  LaurentPoly inv = LaurentPoly::variable(sym("u"), -1);

  CHECK(partition_function(PartitionFunctionKind::Z, 9, 1, 0,
                           PositionSeq({3, 5, 7}, 9),
                           PositionSeq({2, 5, 6, 9}, 9), u) ==
        one_minus_inv("u").pow(3) * inv.pow(2));

  CHECK(partition_function(PartitionFunctionKind::U, 1, 1, 0,
                           PositionSeq({}, 1), PositionSeq({}, 1), u) ==
        one_minus_inv("u"));

  // Unreachable output: a B-layer moves particles weakly left, so a
  // configuration needing a rightward jump vanishes.
  CHECK(partition_function(PartitionFunctionKind::Z, 3, 1, 0,
                           PositionSeq({3}, 3), PositionSeq({1, 2}, 3), u)
            .is_zero());

  CHECK_THROWS_AS(
      partition_function(PartitionFunctionKind::Z, 3, 1, 0,
                         PositionSeq({1}, 3), PositionSeq({1}, 3), u),
      argument_error);
  CHECK_THROWS_AS(
      partition_function(PartitionFunctionKind::ZBD, 3, 1, 2,
                         PositionSeq({1}, 3), PositionSeq({1}, 3), u),
      argument_error);
}

TEST_CASE("partition functions are symmetric in the parameters") {
  std::vector<SpectralParam> u{usym("u1"), usym("u2")};
  std::vector<SpectralParam> swapped{usym("u2"), usym("u1")};
  for (int m = 2; m <= 4; ++m)
    for (const auto& xs : k_subsets(m, 1))
      for (const auto& ys : k_subsets(m, 3)) {
        PositionSeq x({xs[0] + 1}, m);
        std::vector<int> yv{ys[0] + 1, ys[1] + 1, ys[2] + 1};
        PositionSeq y(yv, m);
        CHECK(partition_function(PartitionFunctionKind::Z, m, 2, 0, x, y, u) ==
              partition_function(PartitionFunctionKind::Z, m, 2, 0, x, y,
                                 swapped));
      }
}

TEST_CASE("sweep agrees with brute-force contraction") {
  std::vector<OperatorWord> words;
  words.push_back({{{OpKind::B, usym("u1")}}});
  words.push_back({{{OpKind::D, usym("u1")}}});
  words.push_back({{{OpKind::B, usym("u1")}, {OpKind::D, usym("u2")}}});
  words.push_back({{{OpKind::D, usym("u2")}, {OpKind::B, usym("u1")}}});
  words.push_back({{{OpKind::A, usym("u1")}, {OpKind::C, usym("u2")}}});
  for (int m = 1; m <= 4; ++m)
    for (const OperatorWord& word : words) {
      const long delta = static_cast<long>(word.b_count()) -
                         static_cast<long>(std::count_if(
                             word.factors.begin(), word.factors.end(),
                             [](const OpFactor& f) {
                               return f.kind == OpKind::C;
                             }));
      for (int l = 0; l <= m; ++l) {
        if (l + delta < 0 || l + delta > m) continue;
        for (const auto& ks : k_subsets(m, l))
          for (const auto& bs : k_subsets(m, static_cast<int>(l + delta))) {
            std::vector<int> kv(ks.size()), bv(bs.size());
            for (std::size_t i = 0; i < ks.size(); ++i) kv[i] = ks[i] + 1;
            for (std::size_t i = 0; i < bs.size(); ++i) bv[i] = bs[i] + 1;
            PositionSeq ket(kv, m), bra(bv, m);
            CHECK(matrix_element(bra, word, ket) ==
                  matrix_element_bruteforce(bra, word, ket));
          }
      }
    }
}

TEST_CASE("yang-baxter relation") {
  CHECK(check_yang_baxter(usym("u"), usym("v"), usym("w")));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto v = draw_distinct_rationals(rng, 3);
    CHECK(check_yang_baxter(SpectralParam::rational(v[0]),
                            SpectralParam::rational(v[1]),
                            SpectralParam::rational(v[2])));
  }

  RWeights perturbed = [](int a, int b, int c, int d, const SpectralParam& u,
                          const SpectralParam& w) {
    LaurentPoly e = r_elem(a, b, c, d, u, w);
    if (a == 0 && b == 1 && c == 1 && d == 0)
      e += LaurentPoly::constant(frac(1, 3));
    return e;
  };
  CHECK_FALSE(check_yang_baxter_with(perturbed, usym("u"), usym("v"),
                                     usym("w")));
}

TEST_CASE("commutation relations on small chains") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(check_commutation(CommutationRelation::DbExpansion, m));
    CHECK(check_commutation(CommutationRelation::DbSwap, m));
    CHECK(check_commutation(CommutationRelation::BbCommute, m));
    CHECK(check_commutation(CommutationRelation::DdCommute, m));
  }
  // The single-swap subset expansion coincides with the two-term exchange.
  CHECK(check_commutation(CommutationRelation::MultipleBd, 3, 2, 1));
  CHECK(check_commutation(CommutationRelation::MultipleBd, 4, 3, 1));
  CHECK(check_commutation(CommutationRelation::MultipleBd, 4, 3, 2));
  CHECK(check_commutation(CommutationRelation::Intertwining, 2));
}
