#include "gkp/pushforward.hpp"

namespace gkp {

namespace {

LaurentPoly eval_at(const LaurentPoly& p, Symbol t, const Rational& a) {
  std::map<SymId, LaurentPoly> assign{{t.id(), LaurentPoly::constant(a)}};
  return p.substitute_poly(assign);
}

/// Taylor coefficients of p around t = a, up to the given order, by
/// repeated exact division by (t - a). Requires p polynomial in t.
std::vector<LaurentPoly> taylor_at(LaurentPoly p, Symbol t, const Rational& a,
                                   int order) {
  const LaurentPoly lin = LaurentPoly::variable(t) - LaurentPoly::constant(a);
  std::vector<LaurentPoly> c;
  c.reserve(order + 1);
  for (int i = 0; i <= order; ++i) {
    LaurentPoly v = eval_at(p, t, a);
    c.push_back(v);
    if (i < order) p = exact_div(p - v, lin);
  }
  return c;
}

/// Sum of residues of e over the poles t = a (a running over the alpha
/// values); poles at t = 0 sit outside the contour and are not taken.
/// Higher-order poles are handled by exact series expansion.
RatFunc residues_in(const RatFunc& e, Symbol t,
                    const std::vector<Rational>& poles) {
  LaurentPoly num = e.num();
  LaurentPoly den = e.den();
  const int shift =
      -std::min(num.min_degree_in(t.id()), den.min_degree_in(t.id()));
  if (shift > 0) {
    const Monomial ts = Monomial(t, shift);
    num = num.times_monomial(ts);
    den = den.times_monomial(ts);
  }
  RatFunc total;
  for (const Rational& a : poles) {
    LaurentPoly linear = LaurentPoly::variable(t) - LaurentPoly::constant(a);
    LaurentPoly q1 = den;
    int s = 0;
    while (eval_at(q1, t, a).is_zero()) {
      q1 = exact_div(q1, linear);
      ++s;
    }
    if (s == 0) continue;
    const std::vector<LaurentPoly> pc = taylor_at(num, t, a, s - 1);
    const std::vector<LaurentPoly> qc = taylor_at(q1, t, a, s - 1);
    const RatFunc q0(qc[0]);
    std::vector<RatFunc> r(s);
    for (int i = 0; i < s; ++i) {
      RatFunc acc{pc[i]};
      for (int j = 1; j <= i; ++j) acc = acc - RatFunc(qc[j]) * r[i - j];
      r[i] = acc / q0;
    }
    total = total + r[s - 1];
  }
  return total;
}

}  // namespace

RatFunc residue_pushforward(const GrothClassExpr& f,
                            const AlphaAssignment& alpha) {
  alpha.validate();
  const int n = f.n();
  const int k = f.k();
  if (alpha.size() != n)
    throw argument_error("alpha assignment size must match the class rank");
  std::vector<Rational> av;
  av.reserve(n);
  for (const SpectralParam& v : alpha.values) {
    if (v.is_symbol())
      throw argument_error("residue evaluation needs rational alphas");
    av.push_back(v.rational_value());
  }
  const std::vector<Symbol> z = z_symbols(n);
  std::map<SymId, LaurentPoly> rename;
  for (int i = 0; i < k; ++i)
    rename.emplace(f.sigma()[i].id(), LaurentPoly::variable(z[i]));
  for (int j = 0; j < n - k; ++j)
    rename.emplace(f.omega()[j].id(), LaurentPoly::variable(z[k + j]));

  LaurentPoly num = f.poly().substitute_poly(rename);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      num = num * (LaurentPoly::one() -
                   LaurentPoly::variable(z[j]) * LaurentPoly::variable(z[i], -1));
  for (int i = 0; i < n; ++i)
    num = num * LaurentPoly::variable(z[i], -1);  // the dz/z measure

  LaurentPoly den = LaurentPoly::one();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      den = den * (LaurentPoly::variable(z[i]).scaled(Rational(1) / av[j]) -
                   LaurentPoly::one());

  RatFunc e(std::move(num), std::move(den));
  for (int i = n - 1; i >= 0; --i) e = residues_in(e, z[i], av);
  return e;
}

}  // namespace gkp
