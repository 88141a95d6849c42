#pragma once

#include <map>
#include <span>
#include <vector>

#include "gkp/lattice.hpp"
#include "gkp/laurent.hpp"
#include "gkp/matrix.hpp"
#include "gkp/partition.hpp"
#include "gkp/symfunc.hpp"

namespace gkp {

/// Truncation box for the Schur-operator construction.
struct Box {
  int rows;
  int cols;
};

/// Finitely supported map partition -> coefficient; the state space the
/// box-adding and box-removing operators act on.
using PartitionVector = std::map<Partition, LaurentPoly>;

/// Grassmannian Grothendieck polynomial G_lambda(z_1..z_n) by its
/// determinant form: det(z_i^{lambda_j+n-j} (1-z_i)^{j-1}) divided
/// exactly by the Vandermonde product prod_{i<j}(z_i - z_j). Symmetric
/// in z; requires length(lambda) <= n. With no variables this is
/// 1 for the empty shape and 0 otherwise.
LaurentPoly groth_det(const Partition& lambda, std::span<const Symbol> z);

/// Double (factorial) version: entries [z_i|v]^{lambda_j+n-j}(1-z_i)^{j-1}
/// where [z|v]^p = (z + v_1 - z v_1)...(z + v_p - z v_p), padding v with
/// zeros past its length. Reduces to groth_det when all v vanish.
LaurentPoly groth_double(const Partition& lambda, std::span<const Symbol> z,
                         std::span<const Symbol> v);

/// One-variable skew polynomial: u^{-a} (1 - u^{-1})^{|lambda|-|mu|} when
/// lambda interlaces mu (a counts indices j with lambda_{j+1} != mu_j),
/// zero otherwise.
LaurentPoly skew_one_var(const Partition& lambda, const Partition& mu,
                         const SpectralParam& u);

/// Multivariable skew polynomial: sum over interlacing chains
/// lambda = l^{(0)} > l^{(1)} > ... > l^{(n)} = mu of the one-variable
/// factors. With no variables this is [lambda == mu].
LaurentPoly skew_multi(const Partition& lambda, const Partition& mu,
                       std::span<const SpectralParam> u);

/// Iwao's r x r determinant form of the skew polynomial in z-variables,
/// in the normalization that matches the lattice convention (alternating
/// sign on the generalized binomial). Requires
/// r >= max(length(lambda), #z + length(mu)).
LaurentPoly skew_iwao(const Partition& lambda, const Partition& mu,
                      std::span<const Symbol> z, int r);
LaurentPoly skew_iwao(const Partition& lambda, const Partition& mu,
                      std::span<const Symbol> z);

/// The source normalization without the alternating sign. Disagrees with
/// the chain evaluator once mu has two or more parts; kept so the
/// discrepancy can be demonstrated and recorded, not silently patched.
LaurentPoly skew_iwao_source_form(const Partition& lambda, const Partition& mu,
                                  std::span<const Symbol> z);

/// Schur-operator construction: the coefficient of lambda in
/// A(x_n)...A(x_1) mu, where A(x) = ...(1 + x u~_2)(1 + x u~_1) with
/// u~_i = u_i - beta u_i d_i, truncated to the given box (factors past
/// the box width act as identity on box-bounded states).
LaurentPoly schur_op_skew(const Partition& lambda, const Partition& mu,
                          std::span<const SpectralParam> x,
                          const SpectralParam& beta, Box box);

/// Branching identity: G_lambda in l+1 variables equals the sum over
/// interlacing mu of the one-variable skew factor times G_mu, with every
/// evaluator mapped into the u-variables.
bool branching_check(const Partition& lambda,
                     std::span<const SpectralParam> u);

/// Box-adding Schur operator on a PartitionVector (exposed for tests):
/// adds a box in column i where possible, dropping results outside box.
PartitionVector schur_add_box(const PartitionVector& v, int column, Box box);
/// Box-removing Schur operator.
PartitionVector schur_remove_box(const PartitionVector& v, int column);

/// Change of variables z_j = 1 - u_j^{-1} applied to a polynomial in the
/// z list; the workhorse bridging determinant evaluators to the lattice.
LaurentPoly z_to_u(const LaurentPoly& p, std::span<const Symbol> z,
                   std::span<const SpectralParam> u);

/// The shared z-variable pool z1, z2, ...
std::vector<Symbol> z_symbols(std::size_t n);

}  // namespace gkp
