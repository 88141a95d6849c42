#include "gkp/grothendieck.hpp"

#include <algorithm>

#include "gkp/ratfunc.hpp"

namespace gkp {

LaurentPoly groth_det(const Partition& lambda, std::span<const Symbol> z) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(lambda.length()) > n)
    return n == 0 && lambda.is_empty() ? LaurentPoly::one()
                                       : LaurentPoly::zero();
  if (n == 0) return LaurentPoly::one();
  RingMatrix mat(n);
  for (int i = 0; i < n; ++i) {
    const LaurentPoly zi = LaurentPoly::variable(z[i]);
    const LaurentPoly one_minus = LaurentPoly::one() - zi;
    for (int j = 0; j < n; ++j) {
      int e = lambda.part(j + 1) + n - (j + 1);
      mat.at(i, j) = zi.pow(e) * one_minus.pow(j);
    }
  }
  LaurentPoly det = determinant(mat);
  LaurentPoly vand = LaurentPoly::one();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      vand = vand * (LaurentPoly::variable(z[i]) - LaurentPoly::variable(z[j]));
  try {
    return exact_div(det, vand);
  } catch (const inexact_division_error&) {
    throw internal_error("Grothendieck determinant not divisible by the Vandermonde");
  }
}

LaurentPoly groth_double(const Partition& lambda, std::span<const Symbol> z,
                         std::span<const Symbol> v) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(lambda.length()) > n)
    return n == 0 && lambda.is_empty() ? LaurentPoly::one()
                                       : LaurentPoly::zero();
  if (n == 0) return LaurentPoly::one();
  // [z|v]^p as cumulative products, one row at a time.
  const int max_pow = lambda.part(1) + n - 1;
  RingMatrix mat(n);
  for (int i = 0; i < n; ++i) {
    const LaurentPoly zi = LaurentPoly::variable(z[i]);
    const LaurentPoly one_minus = LaurentPoly::one() - zi;
    std::vector<LaurentPoly> bracket(max_pow + 1);
    bracket[0] = LaurentPoly::one();
    for (int p = 1; p <= max_pow; ++p) {
      LaurentPoly vp = p <= static_cast<int>(v.size())
                           ? LaurentPoly::variable(v[p - 1])
                           : LaurentPoly::zero();
      bracket[p] = bracket[p - 1] * (zi + vp - zi * vp);
    }
    for (int j = 0; j < n; ++j) {
      int e = lambda.part(j + 1) + n - (j + 1);
      mat.at(i, j) = bracket[e] * one_minus.pow(j);
    }
  }
  LaurentPoly det = determinant(mat);
  LaurentPoly vand = LaurentPoly::one();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      vand = vand * (LaurentPoly::variable(z[i]) - LaurentPoly::variable(z[j]));
  try {
    return exact_div(det, vand);
  } catch (const inexact_division_error&) {
    throw internal_error("double Grothendieck determinant not divisible");
  }
}

LaurentPoly skew_one_var(const Partition& lambda, const Partition& mu,
                         const SpectralParam& u) {
  if (!interlaces(lambda, mu)) return LaurentPoly::zero();
  const SkewStats st = skew_stats(lambda, mu);
  const LaurentPoly inv = u.inv_poly();
  return inv.pow(st.a_stat) * (LaurentPoly::one() - inv).pow(st.weight);
}

namespace {

/// All rho with nu interlacing rho (i.e. rho reachable one step down)
/// that still contain the floor partition.
std::vector<Partition> interlacing_below(const Partition& nu,
                                         const Partition& floor) {
  std::vector<Partition> out;
  const int len = static_cast<int>(nu.length());
  // Iterative cartesian product over rho_j in [max(nu_{j+1}, floor_j), nu_j].
  std::vector<int> lo(len), hi(len);
  for (int j = 0; j < len; ++j) {
    lo[j] = std::max(nu.part(j + 2), floor.part(j + 1));
    hi[j] = nu.part(j + 1);
    if (lo[j] > hi[j]) return out;
  }
  std::vector<int> cur(lo);
  while (true) {
    out.push_back(Partition(std::vector<int>(cur)));
    int j = len - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

}  // namespace

LaurentPoly skew_multi(const Partition& lambda, const Partition& mu,
                       std::span<const SpectralParam> u) {
  if (u.empty())
    return lambda == mu ? LaurentPoly::one() : LaurentPoly::zero();
  if (!lambda.contains(mu)) return LaurentPoly::zero();
  // Depth-first over interlacing chains, memoized on the intermediate
  // shape and the number of variables still to place.
  std::map<std::pair<Partition, std::size_t>, LaurentPoly> memo;
  std::function<LaurentPoly(const Partition&, std::size_t)> go =
      [&](const Partition& nu, std::size_t j) -> LaurentPoly {
    if (j == u.size())
      return nu == mu ? LaurentPoly::one() : LaurentPoly::zero();
    auto key = std::make_pair(nu, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly acc;
    for (const Partition& rho : interlacing_below(nu, mu))
      acc += skew_one_var(nu, rho, u[j]) * go(rho, j + 1);
    return memo.emplace(std::move(key), std::move(acc)).first->second;
  };
  return go(lambda, 0);
}

namespace {

LaurentPoly iwao_determinant(const Partition& lambda, const Partition& mu,
                             std::span<const Symbol> z, int r,
                             bool alternate_binomial) {
  const int need = std::max<int>(static_cast<int>(lambda.length()),
                                 static_cast<int>(z.size() + mu.length()));
  if (r < need) throw argument_error("skew_iwao rank r below its lower bound");
  // Twisted sums H_p^{(i)} over a shared h-table.
  int pmax = 0;
  for (int i = 1; i <= r; ++i) pmax = std::max(pmax, lambda.part(i) + r - 1);
  std::vector<LaurentPoly> h(std::max(pmax, 0) + 1);
  for (int d = 0; d <= pmax; ++d) h[d] = complete_symmetric(z, d);
  auto h_at = [&](int d) -> LaurentPoly {
    if (d < 0 || d > pmax) return LaurentPoly::zero();
    return h[d];
  };
  auto H = [&](int p, int i) {
    LaurentPoly acc;
    for (int l = 0; l <= i; ++l) {
      LaurentPoly hp = h_at(p + l);
      if (hp.is_zero()) continue;
      Rational c = gen_binomial(i, l);
      if (l % 2) c = -c;
      acc += hp.scaled(c);
    }
    return acc;
  };
  RingMatrix mat(r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      LaurentPoly entry;
      const int top = mu.part(j) - j + r;
      for (int k = 0; k <= top; ++k) {
        Rational c = gen_binomial(1 - j, k);
        if (alternate_binomial && k % 2) c = -c;
        if (c == 0) continue;
        LaurentPoly term = H(lambda.part(i) - mu.part(j) - i + j + k, i - 1);
        if (!term.is_zero()) entry += term.scaled(c);
      }
      mat.at(i - 1, j - 1) = std::move(entry);
    }
  return determinant(mat);
}

}  // namespace

LaurentPoly skew_iwao(const Partition& lambda, const Partition& mu,
                      std::span<const Symbol> z, int r) {
  // The generalized binomial carries an alternating sign relative to the
  // source normalization; the agreement sweep against the chain evaluator
  // fixes this translation, and the uncorrected form is kept below as a
  // recorded control.
  return iwao_determinant(lambda, mu, z, r, true);
}

LaurentPoly skew_iwao(const Partition& lambda, const Partition& mu,
                      std::span<const Symbol> z) {
  const int r = std::max<int>(static_cast<int>(lambda.length()),
                              static_cast<int>(z.size() + mu.length()));
  return skew_iwao(lambda, mu, z, std::max(r, 1));
}

LaurentPoly skew_iwao_source_form(const Partition& lambda, const Partition& mu,
                                  std::span<const Symbol> z) {
  const int r = std::max<int>(
      std::max<int>(static_cast<int>(lambda.length()),
                    static_cast<int>(z.size() + mu.length())),
      1);
  return iwao_determinant(lambda, mu, z, r, false);
}

PartitionVector schur_add_box(const PartitionVector& v, int column, Box box) {
  PartitionVector out;
  for (const auto& [p, c] : v) {
    // Height of column `column` and the row the new box would occupy.
    int h = 0;
    while (h < static_cast<int>(p.length()) && p.part(h + 1) >= column) ++h;
    if (p.part(h + 1) != column - 1) continue;  // no addable corner here
    if (h + 1 > box.rows || column > box.cols) continue;
    std::vector<int> parts(p.parts());
    if (h < static_cast<int>(parts.size()))
      parts[h] = column;
    else
      parts.push_back(column);
    Partition q(std::move(parts));
    auto [it, inserted] = out.emplace(std::move(q), c);
    if (!inserted) it->second += c;
  }
  return out;
}

PartitionVector schur_remove_box(const PartitionVector& v, int column) {
  PartitionVector out;
  for (const auto& [p, c] : v) {
    int h = 0;
    while (h < static_cast<int>(p.length()) && p.part(h + 1) >= column) ++h;
    if (h == 0 || p.part(h) != column) continue;  // no removable box here
    std::vector<int> parts(p.parts());
    parts[h - 1] = column - 1;
    Partition q(std::move(parts));
    auto [it, inserted] = out.emplace(std::move(q), c);
    if (!inserted) it->second += c;
  }
  return out;
}

namespace {

void pv_add(PartitionVector& dst, const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

/// One column factor 1 + x (u_i - beta u_i d_i).
PartitionVector column_factor(const PartitionVector& v, int column,
                              const LaurentPoly& x, const LaurentPoly& beta,
                              Box box) {
  PartitionVector out = v;
  PartitionVector added = schur_add_box(v, column, box);
  for (const auto& [p, c] : added) pv_add(out, p, c * x);
  PartitionVector readded =
      schur_add_box(schur_remove_box(v, column), column, box);
  for (const auto& [p, c] : readded) pv_add(out, p, -(c * x * beta));
  return out;
}

}  // namespace

LaurentPoly schur_op_skew(const Partition& lambda, const Partition& mu,
                          std::span<const SpectralParam> x,
                          const SpectralParam& beta, Box box) {
  if (!lambda.fits_box(box.rows, box.cols))
    throw box_error("lambda does not fit the truncation box");
  if (!mu.fits_box(box.rows, box.cols))
    throw box_error("mu does not fit the truncation box");
  const LaurentPoly b = beta.poly();
  PartitionVector state;
  state.emplace(mu, LaurentPoly::one());
  for (const SpectralParam& xj : x) {
    const LaurentPoly xv = xj.poly();
    for (int col = 1; col <= box.cols; ++col)
      state = column_factor(state, col, xv, b, box);
  }
  auto it = state.find(lambda);
  return it == state.end() ? LaurentPoly::zero() : it->second;
}

LaurentPoly z_to_u(const LaurentPoly& p, std::span<const Symbol> z,
                   std::span<const SpectralParam> u) {
  if (z.size() != u.size())
    throw argument_error("z_to_u needs matching variable lists");
  std::map<SymId, LaurentPoly> assignment;
  for (std::size_t j = 0; j < z.size(); ++j)
    assignment.emplace(z[j].id(), LaurentPoly::one() - u[j].inv_poly());
  return p.substitute_poly(assignment);
}

std::vector<Symbol> z_symbols(std::size_t n) {
  std::vector<Symbol> z;
  z.reserve(n);
  for (std::size_t j = 1; j <= n; ++j)
    z.push_back(sym("z" + std::to_string(j)));
  return z;
}

bool branching_check(const Partition& lambda,
                     std::span<const SpectralParam> u) {
  if (u.empty()) throw argument_error("branching_check needs >= 1 variable");
  const std::size_t l = u.size() - 1;
  // The determinant evaluator in z-variables, pushed through
  // z_j = 1 - u_j^{-1}, against the one-variable skew factors.
  const std::vector<Symbol> z = z_symbols(l + 1);
  auto g_at = [&](const Partition& p, std::size_t nvars) {
    std::span<const Symbol> zs(z.data(), nvars);
    std::span<const SpectralParam> us(u.data(), nvars);
    if (p.length() > nvars) return LaurentPoly::zero();
    return z_to_u(groth_det(p, zs), zs, us);
  };
  LaurentPoly lhs = g_at(lambda, l + 1);
  LaurentPoly rhs;
  for (const Partition& muv : interlacing_below(lambda, Partition()))
    rhs += skew_one_var(lambda, muv, u[l]) * g_at(muv, l);
  return lhs == rhs;
}

}  // namespace gkp
