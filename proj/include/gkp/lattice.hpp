#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gkp/laurent.hpp"
#include "gkp/partition.hpp"
#include "gkp/ratfunc.hpp"

namespace gkp {

/// A spectral parameter: either a variable symbol or an exact rational
/// value. Parameters used as lattice weights appear inverted, so
/// inverting the value zero raises pole_error; zero itself is a legal
/// scalar for the non-inverting Schur-operator arguments.
class SpectralParam {
 public:
  static SpectralParam symbol(Symbol s) { return SpectralParam(s); }
  static SpectralParam rational(Rational r);

  bool is_symbol() const { return is_symbol_; }
  Symbol symbol_value() const { return sym_; }
  const Rational& rational_value() const { return rat_; }

  /// The parameter itself as a Laurent polynomial.
  LaurentPoly poly() const;
  /// Its inverse u^{-1} as a Laurent polynomial.
  LaurentPoly inv_poly() const;

  bool operator==(const SpectralParam& o) const;
  std::string to_string() const;

 private:
  explicit SpectralParam(Symbol s) : is_symbol_(true), sym_(s) {}
  bool is_symbol_;
  Symbol sym_{SymId{0}};
  Rational rat_;
};

/// Five-vertex R-matrix entry [R(u,w)] with row (e1,e2) and column
/// (d1,d2): 1 on (00->00), (11->11), (10->01); w/u on (01->10);
/// 1 - w/u on (10->10); 0 otherwise. Entries vanish unless
/// e1+e2 = d1+d2 (the ice rule).
LaurentPoly r_elem(int e1, int e2, int d1, int d2, const SpectralParam& u,
                   const SpectralParam& w);

enum class OpKind { A, B, C, D };

/// One monodromy-row operator with its spectral parameter.
struct OpFactor {
  OpKind kind;
  SpectralParam param;
};

/// A product of B/D (or A/C) operators, applied right-to-left like the
/// written operator product.
struct OperatorWord {
  std::vector<OpFactor> factors;
  std::size_t b_count() const;
};

/// A vector in the fixed-particle-number sector of the chain space:
/// chain length m, particle count l, and a sparse amplitude map over
/// position sequences. Zero amplitudes are never stored.
class SectorVector {
 public:
  SectorVector(int chain_length, int particle_count)
      : m_(chain_length), count_(particle_count) {}

  static SectorVector vacuum(int m) { return basis(PositionSeq({}, m)); }
  static SectorVector basis(const PositionSeq& s);

  int chain_length() const { return m_; }
  int particle_count() const { return count_; }
  const std::map<PositionSeq, LaurentPoly>& amplitudes() const { return amp_; }

  void add(const PositionSeq& s, const LaurentPoly& c);
  LaurentPoly amplitude(const PositionSeq& s) const;

  SectorVector operator+(const SectorVector& o) const;
  SectorVector operator-(const SectorVector& o) const;
  SectorVector scaled(const LaurentPoly& c) const;

  bool operator==(const SectorVector& o) const;
  bool is_zero() const { return amp_.empty(); }

  std::string to_string() const;

 private:
  int m_;
  int count_;
  std::map<PositionSeq, LaurentPoly> amp_;
};

/// Row sweep of one monodromy operator over every basis state of v.
/// B raises the particle count by one, D preserves it; applying B to a
/// full chain throws sector_error.
SectorVector apply_operator(const SectorVector& v, OpKind kind,
                            const SpectralParam& u);

/// Word applied right-to-left to a basis ket, contracted with the bra.
/// A bra/ket particle-count mismatch gives 0, not an error.
LaurentPoly matrix_element(const PositionSeq& bra, const OperatorWord& word,
                           const PositionSeq& ket);

enum class PartitionFunctionKind { Z, U, ZBD, ZDB };

/// The four partition-function families as operator words:
///   Z:   <y| B(u_1)...B(u_n) |x>,          |y| = |x| + n
///   U:   <y| D(u_1)...D(u_n) |x>,          |y| = |x|
///   ZBD: <y| B(u_1)..B(u_k) D(u_{k+1})..D(u_n) |x>,  |y| = |x| + k
///   ZDB: <y| D(u_n)..D(u_{k+1}) B(u_k)..B(u_1) |x>,  |y| = |x| + k
LaurentPoly partition_function(PartitionFunctionKind kind, int m, int n, int k,
                               const PositionSeq& x, const PositionSeq& y,
                               std::span<const SpectralParam> params);

/// Local Boltzmann weights as a customization point, so tests can verify
/// that a perturbed vertex breaks the Yang-Baxter relation.
using RWeights = std::function<LaurentPoly(int, int, int, int,
                                           const SpectralParam&,
                                           const SpectralParam&)>;

/// Checks all 64 component identities of the Yang-Baxter relation for
/// R(u,v), R(u,w), R(v,w) by exact arithmetic.
bool check_yang_baxter(const SpectralParam& u, const SpectralParam& v,
                       const SpectralParam& w);
bool check_yang_baxter_with(const RWeights& weights, const SpectralParam& u,
                            const SpectralParam& v, const SpectralParam& w);

/// The exchange relations of the Yang-Baxter algebra, named by role:
///   DbExpansion: (u1-u2) D(u1)B(u2) = u1 B(u2)D(u1) - u2 B(u1)D(u2)
///   DbSwap:      D(u1)B(u2) = D(u2)B(u1)
///   BbCommute:   B(u1)B(u2) = B(u2)B(u1)
///   DdCommute:   D(u1)D(u2) = D(u2)D(u1)
///   MultipleBd:  the Shigechi-Uchiyama subset-sum expansion of
///                D(u_n)..D(u_{k+1}) B(u_k)..B(u_1), checked in
///                denominator-cleared polynomial form
///   Intertwining: all 16 boundary components of the RTT relation
enum class CommutationRelation {
  DbExpansion,
  DbSwap,
  BbCommute,
  DdCommute,
  MultipleBd,
  Intertwining,
};

const char* commutation_relation_name(CommutationRelation r);

/// Verifies the relation as an operator identity on every sector of the
/// length-m chain with symbolic (pairwise distinct) parameters. n and k
/// are used by MultipleBd only.
bool check_commutation(CommutationRelation rel, int m, int n = 2, int k = 1);

}  // namespace gkp
