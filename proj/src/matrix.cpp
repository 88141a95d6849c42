#include "gkp/matrix.hpp"

#include <functional>
#include <map>

#include "gkp/errors.hpp"

namespace gkp {

RingMatrix::RingMatrix(std::size_t n) : n_(n), m_(n * n) {
  if (n == 0) throw argument_error("RingMatrix dimension must be >= 1");
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = LaurentPoly::one();
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (n_ != o.n_) throw argument_error("matrix dimension mismatch");
  RingMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      LaurentPoly s;
      for (std::size_t k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

namespace {

/// Laplace expansion with minors memoized on the column subset: no
/// divisions, and each of the 2^n minors is computed once. The right
/// tool for small dimensions with dense polynomial entries.
LaurentPoly det_laplace_memo(const RingMatrix& m) {
  const int n = static_cast<int>(m.dim());
  std::map<unsigned, LaurentPoly> memo;
  std::function<LaurentPoly(unsigned, int)> go =
      [&](unsigned mask, int row) -> LaurentPoly {
    if (mask == 0) return LaurentPoly::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LaurentPoly acc;
    int sign = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!m.at(row, j).is_zero()) {
        LaurentPoly t = m.at(row, j) * go(mask & ~(1u << j), row + 1);
        if (sign % 2 == 0)
          acc += t;
        else
          acc -= t;
      }
      ++sign;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return go((1u << n) - 1, 0);
}

LaurentPoly det_cofactor(const RingMatrix& m, std::vector<std::size_t> cols,
                         std::size_t row) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  LaurentPoly acc;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (m.at(row, cols[i]).is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i) rest.push_back(cols[j]);
    LaurentPoly minor = det_cofactor(m, std::move(rest), row + 1);
    LaurentPoly contrib = m.at(row, cols[i]) * minor;
    if (i % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

LaurentPoly det_bareiss(RingMatrix m) {
  const std::size_t n = m.dim();
  LaurentPoly prev = LaurentPoly::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly::zero();
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        try {
          m.at(i, j) = exact_div(t, prev);
        } catch (const inexact_division_error&) {
          throw internal_error("Bareiss pivot division was not exact");
        }
      }
    prev = m.at(k, k);
  }
  LaurentPoly d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

LaurentPoly determinant(const RingMatrix& m) {
  const std::size_t n = m.dim();
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, std::move(cols), 0);
  }
  if (n <= 8) return det_laplace_memo(m);
  return det_bareiss(m);
}

}  // namespace gkp
