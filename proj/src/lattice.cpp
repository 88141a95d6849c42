#include "gkp/lattice.hpp"

#include <algorithm>

#include "gkp/subsets.hpp"

namespace gkp {

SpectralParam SpectralParam::rational(Rational r) {
  SpectralParam p{Symbol(SymId{0})};
  p.is_symbol_ = false;
  p.rat_ = std::move(r);
  return p;
}

LaurentPoly SpectralParam::poly() const {
  return is_symbol_ ? LaurentPoly::variable(sym_) : LaurentPoly::constant(rat_);
}

LaurentPoly SpectralParam::inv_poly() const {
  if (!is_symbol_ && rat_ == 0)
    throw pole_error("spectral parameter 0 cannot be inverted");
  return is_symbol_ ? LaurentPoly::variable(sym_, -1)
                    : LaurentPoly::constant(Rational(1) / rat_);
}

bool SpectralParam::operator==(const SpectralParam& o) const {
  if (is_symbol_ != o.is_symbol_) return false;
  return is_symbol_ ? sym_ == o.sym_ : rat_ == o.rat_;
}

std::string SpectralParam::to_string() const {
  return is_symbol_ ? sym_.name() : rat_.get_str();
}

LaurentPoly r_elem(int e1, int e2, int d1, int d2, const SpectralParam& u,
                   const SpectralParam& w) {
  if (e1 + e2 != d1 + d2) return LaurentPoly::zero();  // ice rule
  if (e1 == 0 && e2 == 0) return LaurentPoly::one();
  if (e1 == 1 && e2 == 1) return LaurentPoly::one();
  LaurentPoly w_over_u = w.poly() * u.inv_poly();
  if (e1 == 1 && e2 == 0) {
    if (d1 == 0) return LaurentPoly::one();        // 10 -> 01
    return LaurentPoly::one() - w_over_u;          // 10 -> 10
  }
  // 01 -> 10 carries w/u; 01 -> 01 is not a five-vertex configuration.
  return d1 == 1 ? w_over_u : LaurentPoly::zero();
}

std::size_t OperatorWord::b_count() const {
  std::size_t n = 0;
  for (const auto& f : factors)
    if (f.kind == OpKind::B) ++n;
  return n;
}

SectorVector SectorVector::basis(const PositionSeq& s) {
  SectorVector v(s.chain_length, static_cast<int>(s.count()));
  v.amp_.emplace(s, LaurentPoly::one());
  return v;
}

void SectorVector::add(const PositionSeq& s, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = amp_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) amp_.erase(it);
  }
}

LaurentPoly SectorVector::amplitude(const PositionSeq& s) const {
  auto it = amp_.find(s);
  return it == amp_.end() ? LaurentPoly::zero() : it->second;
}

SectorVector SectorVector::operator+(const SectorVector& o) const {
  SectorVector r = *this;
  for (const auto& [s, c] : o.amp_) r.add(s, c);
  return r;
}

SectorVector SectorVector::operator-(const SectorVector& o) const {
  SectorVector r = *this;
  for (const auto& [s, c] : o.amp_) r.add(s, -c);
  return r;
}

SectorVector SectorVector::scaled(const LaurentPoly& c) const {
  SectorVector r(m_, count_);
  if (c.is_zero()) return r;
  for (const auto& [s, a] : amp_) r.amp_.emplace(s, a * c);
  return r;
}

bool SectorVector::operator==(const SectorVector& o) const {
  return m_ == o.m_ && amp_ == o.amp_;
}

std::string SectorVector::to_string() const {
  if (amp_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : amp_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")|" + k.to_string() + ">";
  }
  return s;
}

namespace {

struct Boundary {
  int aux_in;
  int aux_out;
};

Boundary boundary_for(OpKind kind) {
  switch (kind) {
    case OpKind::A:
      return {0, 0};
    case OpKind::B:
      return {1, 0};
    case OpKind::C:
      return {0, 1};
    case OpKind::D:
      return {1, 1};
  }
  throw internal_error("bad OpKind");
}

/// Row sweep; overflowing or underflowing sectors come back as the empty
/// vector in a clamped-out-of-range sector rather than an error, which
/// the commutation checker relies on.
SectorVector apply_raw(const SectorVector& v, OpKind kind,
                       const SpectralParam& u) {
  const int m = v.chain_length();
  const Boundary bd = boundary_for(kind);
  const int delta = bd.aux_in - bd.aux_out;
  SectorVector out(m, v.particle_count() + delta);
  if (v.particle_count() + delta < 0 || v.particle_count() + delta > m)
    return out;

  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly winv = u.inv_poly();
  const LaurentPoly stay = one - winv;  // aux 1, site 0 passes through

  using State = std::pair<int, std::vector<int>>;
  for (const auto& [positions, amp] : v.amplitudes()) {
    std::map<State, LaurentPoly> cur;
    cur.emplace(State{bd.aux_in, {}}, one);
    for (int site = 1; site <= m; ++site) {
      const bool occ = positions.occupied(site);
      std::map<State, LaurentPoly> next;
      auto emit = [&](const State& st, int aux, bool fill,
                      const LaurentPoly& w, const LaurentPoly& c) {
        State ns{aux, st.second};
        if (fill) ns.second.push_back(site);
        auto [it, inserted] = next.emplace(std::move(ns), c * w);
        if (!inserted) {
          it->second += c * w;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      for (const auto& [st, c] : cur) {
        const int aux = st.first;
        if (aux == 0 && !occ) {
          emit(st, 0, false, one, c);
        } else if (aux == 0 && occ) {
          emit(st, 1, false, winv, c);
        } else if (aux == 1 && !occ) {
          emit(st, 0, true, one, c);
          emit(st, 1, false, stay, c);
        } else {
          emit(st, 1, true, one, c);
        }
      }
      cur = std::move(next);
    }
    for (const auto& [st, c] : cur) {
      if (st.first != bd.aux_out) continue;
      out.add(PositionSeq(st.second, m), c * amp);
    }
  }
  return out;
}

SectorVector apply_word_raw(const OperatorWord& word, const SectorVector& v) {
  SectorVector cur = v;
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    cur = apply_raw(cur, it->kind, it->param);
    if (cur.is_zero() &&
        (cur.particle_count() < 0 || cur.particle_count() > cur.chain_length()))
      return cur;
  }
  return cur;
}

}  // namespace

SectorVector apply_operator(const SectorVector& v, OpKind kind,
                            const SpectralParam& u) {
  if (kind == OpKind::B && v.particle_count() >= v.chain_length())
    throw sector_error("B-operator on a full chain");
  if (kind == OpKind::C && v.particle_count() <= 0)
    throw sector_error("C-operator on the vacuum sector");
  return apply_raw(v, kind, u);
}

LaurentPoly matrix_element(const PositionSeq& bra, const OperatorWord& word,
                           const PositionSeq& ket) {
  if (bra.chain_length != ket.chain_length)
    throw argument_error("bra and ket live on different chains");
  if (word.factors.empty()) throw argument_error("empty operator word");
  long expected = static_cast<long>(ket.count());
  for (const auto& f : word.factors) {
    if (f.kind == OpKind::B) ++expected;
    if (f.kind == OpKind::C) --expected;
  }
  if (expected != static_cast<long>(bra.count())) return LaurentPoly::zero();
  SectorVector v = apply_word_raw(word, SectorVector::basis(ket));
  return v.amplitude(bra);
}

LaurentPoly partition_function(PartitionFunctionKind kind, int m, int n, int k,
                               const PositionSeq& x, const PositionSeq& y,
                               std::span<const SpectralParam> params) {
  if (x.chain_length != m || y.chain_length != m)
    throw argument_error("positions do not live on the length-m chain");
  if (static_cast<int>(params.size()) != n)
    throw argument_error("need one spectral parameter per operator");
  auto expect = [&](std::size_t want_y) {
    if (y.count() != want_y)
      throw argument_error("output positions do not match the family");
  };
  OperatorWord word;
  switch (kind) {
    case PartitionFunctionKind::Z:
      expect(x.count() + n);
      for (int j = 0; j < n; ++j)
        word.factors.push_back({OpKind::B, params[j]});
      break;
    case PartitionFunctionKind::U:
      expect(x.count());
      for (int j = 0; j < n; ++j)
        word.factors.push_back({OpKind::D, params[j]});
      break;
    case PartitionFunctionKind::ZBD:
      if (k < 0 || k > n) throw argument_error("need 0 <= k <= n");
      expect(x.count() + k);
      for (int j = 0; j < k; ++j)
        word.factors.push_back({OpKind::B, params[j]});
      for (int j = k; j < n; ++j)
        word.factors.push_back({OpKind::D, params[j]});
      break;
    case PartitionFunctionKind::ZDB:
      if (k < 0 || k > n) throw argument_error("need 0 <= k <= n");
      expect(x.count() + k);
      for (int j = n - 1; j >= k; --j)
        word.factors.push_back({OpKind::D, params[j]});
      for (int j = k - 1; j >= 0; --j)
        word.factors.push_back({OpKind::B, params[j]});
      break;
  }
  if (word.factors.empty())
    return x == y ? LaurentPoly::one() : LaurentPoly::zero();
  return matrix_element(y, word, x);
}

bool check_yang_baxter_with(const RWeights& weights, const SpectralParam& u,
                            const SpectralParam& v, const SpectralParam& w) {
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2)
      for (int e3 = 0; e3 <= 1; ++e3)
        for (int d1 = 0; d1 <= 1; ++d1)
          for (int d2 = 0; d2 <= 1; ++d2)
            for (int d3 = 0; d3 <= 1; ++d3) {
              LaurentPoly lhs, rhs;
              for (int g1 = 0; g1 <= 1; ++g1)
                for (int g2 = 0; g2 <= 1; ++g2)
                  for (int g3 = 0; g3 <= 1; ++g3) {
                    lhs += weights(g3, g1, d1, d2, u, v) *
                           weights(e1, g2, g3, d3, u, w) *
                           weights(e2, e3, g1, g2, v, w);
                    rhs += weights(g2, g3, d2, d3, v, w) *
                           weights(g1, e3, d1, g3, u, w) *
                           weights(e1, e2, g1, g2, u, v);
                  }
              if (lhs != rhs) return false;
            }
  return true;
}

bool check_yang_baxter(const SpectralParam& u, const SpectralParam& v,
                       const SpectralParam& w) {
  return check_yang_baxter_with(
      [](int a, int b, int c, int d, const SpectralParam& p,
         const SpectralParam& q) { return r_elem(a, b, c, d, p, q); },
      u, v, w);
}

const char* commutation_relation_name(CommutationRelation r) {
  switch (r) {
    case CommutationRelation::DbExpansion:
      return "db-expansion";
    case CommutationRelation::DbSwap:
      return "db-swap";
    case CommutationRelation::BbCommute:
      return "bb-commute";
    case CommutationRelation::DdCommute:
      return "dd-commute";
    case CommutationRelation::MultipleBd:
      return "multiple-bd";
    case CommutationRelation::Intertwining:
      return "intertwining";
  }
  throw internal_error("bad relation");
}

namespace {

std::vector<PositionSeq> all_position_seqs(int m, int count) {
  std::vector<PositionSeq> out;
  for (const auto& s : k_subsets(m, count)) {
    std::vector<int> pos(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) pos[i] = s[i] + 1;
    out.push_back(PositionSeq(std::move(pos), m));
  }
  return out;
}

SectorVector word_on(const std::vector<OpFactor>& factors,
                     const SectorVector& v) {
  OperatorWord w{factors};
  return apply_word_raw(w, v);
}

bool two_param_relation(CommutationRelation rel, int m) {
  const SpectralParam u1 = SpectralParam::symbol(sym("u1"));
  const SpectralParam u2 = SpectralParam::symbol(sym("u2"));
  const LaurentPoly p1 = u1.poly(), p2 = u2.poly();
  for (int l = 0; l <= m; ++l) {
    for (const auto& x : all_position_seqs(m, l)) {
      SectorVector v = SectorVector::basis(x);
      SectorVector lhs(m, 0), rhs(m, 0);
      switch (rel) {
        case CommutationRelation::DbExpansion:
          lhs = word_on({{OpKind::D, u1}, {OpKind::B, u2}}, v).scaled(p1 - p2);
          rhs = word_on({{OpKind::B, u2}, {OpKind::D, u1}}, v).scaled(p1) -
                word_on({{OpKind::B, u1}, {OpKind::D, u2}}, v).scaled(p2);
          break;
        case CommutationRelation::DbSwap:
          lhs = word_on({{OpKind::D, u1}, {OpKind::B, u2}}, v);
          rhs = word_on({{OpKind::D, u2}, {OpKind::B, u1}}, v);
          break;
        case CommutationRelation::BbCommute:
          lhs = word_on({{OpKind::B, u1}, {OpKind::B, u2}}, v);
          rhs = word_on({{OpKind::B, u2}, {OpKind::B, u1}}, v);
          break;
        case CommutationRelation::DdCommute:
          lhs = word_on({{OpKind::D, u1}, {OpKind::D, u2}}, v);
          rhs = word_on({{OpKind::D, u2}, {OpKind::D, u1}}, v);
          break;
        default:
          throw internal_error("not a two-parameter relation");
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool multiple_bd_relation(int m, int n, int k) {
  if (k < 0 || k > n) throw argument_error("need 0 <= k <= n");
  std::vector<SpectralParam> u;
  for (int j = 1; j <= n; ++j)
    u.push_back(SpectralParam::symbol(sym("u" + std::to_string(j))));
  const LaurentPoly v_all = vandermonde(u);

  std::vector<OpFactor> lhs_word;
  for (int j = n - 1; j >= k; --j) lhs_word.push_back({OpKind::D, u[j]});
  for (int j = k - 1; j >= 0; --j) lhs_word.push_back({OpKind::B, u[j]});

  struct Term {
    std::vector<OpFactor> word;
    LaurentPoly coeff;
  };
  std::vector<Term> rhs_terms;
  for (const auto& s : k_subsets(n, k)) {
    Term t;
    for (int i : s) t.word.push_back({OpKind::B, u[i]});
    for (int j : subset_complement(s, n)) t.word.push_back({OpKind::D, u[j]});
    t.coeff = complement_power(u, s, k) * exact_div(v_all, separating_product(u, s));
    rhs_terms.push_back(std::move(t));
  }

  for (int l = 0; l <= m; ++l) {
    for (const auto& x : all_position_seqs(m, l)) {
      SectorVector v = SectorVector::basis(x);
      SectorVector lhs = lhs_word.empty() ? v : word_on(lhs_word, v);
      lhs = lhs.scaled(v_all);
      SectorVector rhs(m, lhs.particle_count());
      for (const auto& t : rhs_terms) {
        SectorVector w = t.word.empty() ? v : word_on(t.word, v);
        rhs = rhs + w.scaled(t.coeff);
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

OpKind op_for(int aux_out, int aux_in) {
  if (aux_out == 0) return aux_in == 0 ? OpKind::A : OpKind::B;
  return aux_in == 0 ? OpKind::C : OpKind::D;
}

bool intertwining_relation(int m) {
  const SpectralParam u1 = SpectralParam::symbol(sym("u1"));
  const SpectralParam u2 = SpectralParam::symbol(sym("u2"));
  for (int ea = 0; ea <= 1; ++ea)
    for (int eb = 0; eb <= 1; ++eb)
      for (int ga = 0; ga <= 1; ++ga)
        for (int gb = 0; gb <= 1; ++gb) {
          for (int l = 0; l <= m; ++l) {
            for (const auto& x : all_position_seqs(m, l)) {
              SectorVector v = SectorVector::basis(x);
              const int target = l + ea + eb - ga - gb;
              SectorVector lhs(m, target), rhs(m, target);
              for (int da = 0; da <= 1; ++da)
                for (int db = 0; db <= 1; ++db) {
                  LaurentPoly cl = r_elem(da, db, ga, gb, u1, u2);
                  if (!cl.is_zero()) {
                    SectorVector t = word_on({{op_for(da, ea), u1},
                                              {op_for(db, eb), u2}},
                                             v);
                    lhs = lhs + t.scaled(cl);
                  }
                  LaurentPoly cr = r_elem(ea, eb, da, db, u1, u2);
                  if (!cr.is_zero()) {
                    SectorVector t = word_on({{op_for(gb, db), u2},
                                              {op_for(ga, da), u1}},
                                             v);
                    rhs = rhs + t.scaled(cr);
                  }
                }
              if (!(lhs == rhs)) return false;
            }
          }
        }
  return true;
}

}  // namespace

bool check_commutation(CommutationRelation rel, int m, int n, int k) {
  if (m < 1) throw argument_error("need m >= 1");
  switch (rel) {
    case CommutationRelation::MultipleBd:
      return multiple_bd_relation(m, n, k);
    case CommutationRelation::Intertwining:
      return intertwining_relation(m);
    default:
      return two_param_relation(rel, m);
  }
}

}  // namespace gkp
