#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gkp/errors.hpp"

namespace gkp {

using SymId = std::uint32_t;

/// Global intern table for variable symbols. Interning is serialized by a
/// mutex; name and rank lookups read containers that only grow, so they
/// need no lock once the table is sealed. The runner seals the table
/// before dispatching cases to worker threads; interning an unseen name
/// on a sealed table is an internal error.
///
/// Each symbol carries a rank equal to its position in name order, so the
/// graded-lex monomial order compares integers instead of strings. A new
/// name shifts the rank values of later names but never the relative
/// order of existing symbols, so previously built monomials stay sorted.
class SymbolTable {
 public:
  static SymbolTable& instance();

  SymId intern(std::string_view name);
  const std::string& name(SymId id) const { return names_[id]; }
  std::uint32_t rank(SymId id) const { return rank_[id]; }
  /// Raw rank array for comparison loops; take a fresh snapshot per
  /// call, interning may reallocate it.
  const std::uint32_t* rank_data() const { return rank_.data(); }
  std::size_t size() const;

  void seal();
  void unseal();

 private:
  SymbolTable() = default;
  mutable std::mutex mu_;
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, SymId> ids_;
  std::vector<std::uint32_t> rank_;
  std::vector<SymId> by_name_;  // ids sorted by name
  bool sealed_ = false;
};

/// A variable symbol, compared and ordered by its name.
class Symbol {
 public:
  explicit Symbol(std::string_view name)
      : id_(SymbolTable::instance().intern(name)) {}
  explicit Symbol(SymId id) : id_(id) {}

  SymId id() const { return id_; }
  const std::string& name() const { return SymbolTable::instance().name(id_); }

  bool operator==(const Symbol& o) const { return id_ == o.id_; }
  bool operator!=(const Symbol& o) const { return id_ != o.id_; }

 private:
  SymId id_;
};

inline Symbol sym(std::string_view name) { return Symbol(name); }

/// Total order on symbols: lexicographic on names, so canonical forms do
/// not depend on interning order.
inline bool sym_less(SymId a, SymId b) {
  const SymbolTable& t = SymbolTable::instance();
  return t.rank(a) < t.rank(b);
}

}  // namespace gkp
