#pragma once

#include <span>
#include <vector>

#include "gkp/lattice.hpp"

namespace gkp {

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

std::vector<int> subset_complement(const std::vector<int>& s, int n);

/// prod_{p<q} (u_q - u_p) over the whole parameter list.
LaurentPoly vandermonde(std::span<const SpectralParam> u);

/// prod_{i in S, j not in S} (u_j - u_i); divides the Vandermonde product
/// up to sign, which exact division absorbs.
LaurentPoly separating_product(std::span<const SpectralParam> u,
                               const std::vector<int>& s);

/// prod_{j not in S} u_j^k as a Laurent polynomial.
LaurentPoly complement_power(std::span<const SpectralParam> u,
                             const std::vector<int>& s, int k);

bool pairwise_distinct(std::span<const SpectralParam> u);

}  // namespace gkp
