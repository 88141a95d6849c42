#include "gkp/subsets.hpp"

#include <algorithm>

namespace gkp {

namespace {
void subsets_rec(int n, int k, int from, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

std::vector<int> subset_complement(const std::vector<int>& s, int n) {
  std::vector<int> out;
  out.reserve(n - s.size());
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

LaurentPoly vandermonde(std::span<const SpectralParam> u) {
  LaurentPoly v = LaurentPoly::one();
  for (std::size_t p = 0; p < u.size(); ++p)
    for (std::size_t q = p + 1; q < u.size(); ++q)
      v = v * (u[q].poly() - u[p].poly());
  return v;
}

LaurentPoly separating_product(std::span<const SpectralParam> u,
                               const std::vector<int>& s) {
  LaurentPoly v = LaurentPoly::one();
  for (int i : s)
    for (int j : subset_complement(s, static_cast<int>(u.size())))
      v = v * (u[j].poly() - u[i].poly());
  return v;
}

LaurentPoly complement_power(std::span<const SpectralParam> u,
                             const std::vector<int>& s, int k) {
  LaurentPoly v = LaurentPoly::one();
  for (int j : subset_complement(s, static_cast<int>(u.size())))
    v = v * u[j].poly().pow(k);
  return v;
}

bool pairwise_distinct(std::span<const SpectralParam> u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i].poly() == u[j].poly()) return false;
  return true;
}

}  // namespace gkp
