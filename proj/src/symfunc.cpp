#include "gkp/symfunc.hpp"

#include "gkp/errors.hpp"

namespace gkp {

LaurentPoly elementary_symmetric(std::span<const Symbol> vars, int d) {
  if (d < 0 || d > static_cast<int>(vars.size())) return LaurentPoly::zero();
  // Coefficients of prod (1 + z_i t), built one variable at a time.
  std::vector<LaurentPoly> e(d + 1);
  e[0] = LaurentPoly::one();
  for (const Symbol& z : vars) {
    LaurentPoly zp = LaurentPoly::variable(z);
    for (int k = d; k >= 1; --k) e[k] += e[k - 1] * zp;
  }
  return e[d];
}

LaurentPoly complete_symmetric(std::span<const Symbol> vars, int d) {
  if (d < 0) return LaurentPoly::zero();
  if (d == 0) return LaurentPoly::one();
  if (vars.empty()) return LaurentPoly::zero();
  // h_k over the first r variables; adding a variable z gives
  // h_k(.., z) = sum_j z^j h_{k-j}(..), folded as a running update.
  std::vector<LaurentPoly> h(d + 1);
  h[0] = LaurentPoly::one();
  for (const Symbol& z : vars) {
    LaurentPoly zp = LaurentPoly::variable(z);
    for (int k = 1; k <= d; ++k) h[k] += h[k - 1] * zp;
  }
  return h[d];
}

LaurentPoly symmetric_poly(SymKind kind, std::span<const Symbol> vars, int d) {
  if (vars.empty()) throw argument_error("symmetric_poly needs variables");
  return kind == SymKind::Elementary ? elementary_symmetric(vars, d)
                                     : complete_symmetric(vars, d);
}

Rational gen_binomial(long p, long q) {
  if (q < 0) throw domain_error("gen_binomial needs q >= 0");
  Rational r = 1;
  for (long j = 0; j < q; ++j) {
    r *= Rational(p - j);
    r /= Rational(j + 1);
  }
  return r;
}

LaurentPoly h_twisted(int p, int i, std::span<const Symbol> vars) {
  if (i < 0) throw domain_error("h_twisted needs i >= 0");
  LaurentPoly acc;
  for (int l = 0; l <= i; ++l) {
    LaurentPoly h = complete_symmetric(vars, p + l);
    if (h.is_zero()) continue;
    Rational c = gen_binomial(i, l);
    if (l % 2) c = -c;
    acc += h.scaled(c);
  }
  return acc;
}

}  // namespace gkp
