#include "gkp/symbol.hpp"

#include <algorithm>

namespace gkp {

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

SymId SymbolTable::intern(std::string_view name) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  if (sealed_)
    throw internal_error("symbol table sealed; cannot intern new name '" +
                         std::string(name) + "'");
  names_.emplace_back(name);
  SymId id = static_cast<SymId>(names_.size() - 1);
  ids_.emplace(std::string_view(names_.back()), id);
  auto pos = std::lower_bound(by_name_.begin(), by_name_.end(), name,
                              [this](SymId s, std::string_view key) {
                                return names_[s] < key;
                              });
  const std::uint32_t new_rank =
      static_cast<std::uint32_t>(pos - by_name_.begin());
  by_name_.insert(pos, id);
  for (std::uint32_t& r : rank_)
    if (r >= new_rank) ++r;
  rank_.push_back(new_rank);
  return id;
}

std::size_t SymbolTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.size();
}

void SymbolTable::seal() {
  std::lock_guard<std::mutex> lock(mu_);
  sealed_ = true;
}

void SymbolTable::unseal() {
  std::lock_guard<std::mutex> lock(mu_);
  sealed_ = false;
}


}  // namespace gkp
