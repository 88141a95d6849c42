#pragma once

#include <vector>

#include "gkp/laurent.hpp"

namespace gkp {

/// Square matrix over the Laurent-polynomial ring.
class RingMatrix {
 public:
  explicit RingMatrix(std::size_t n);
  static RingMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const {
    return m_[i * n_ + j];
  }

  RingMatrix operator*(const RingMatrix& o) const;

 private:
  std::size_t n_;
  std::vector<LaurentPoly> m_;
};

/// Exact determinant: cofactor expansion up to dimension 4, fraction-free
/// Bareiss elimination above that. Both routes are exact and agree.
LaurentPoly determinant(const RingMatrix& m);

}  // namespace gkp
