#include "gkp/pushforward.hpp"

#include <algorithm>

#include "gkp/subsets.hpp"

namespace gkp {

void PushforwardParams::validate() const {
  if (n < 1 || k < 0 || k > n) throw argument_error("need 0 <= k <= n, n >= 1");
  if (l < 0 || l > m - k) throw argument_error("need 0 <= l <= m - k");
  if (!lambda.fits_box(l + k, m - k - l))
    throw argument_error("lambda outside the (m-k-l)^(l+k) box");
  if (!mu.fits_box(l, m - l))
    throw argument_error("mu outside the (m-l)^l box");
}

std::string PushforwardParams::to_string() const {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
         " k=" + std::to_string(k) + " l=" + std::to_string(l) +
         " lambda=" + lambda.to_string() + " mu=" + mu.to_string();
}

namespace {

std::vector<Symbol> named_pool(const char* stem, std::size_t count) {
  std::vector<Symbol> v;
  v.reserve(count);
  for (std::size_t j = 1; j <= count; ++j)
    v.push_back(sym(stem + std::to_string(j)));
  return v;
}

bool symmetric_in(const LaurentPoly& p, const std::vector<Symbol>& vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    std::map<SymId, LaurentPoly> swap_two{
        {vars[i].id(), LaurentPoly::variable(vars[i + 1])},
        {vars[i + 1].id(), LaurentPoly::variable(vars[i])}};
    if (p.substitute_poly(swap_two) != p) return false;
  }
  return true;
}

}  // namespace

std::vector<Symbol> sigma_symbols(std::size_t k) { return named_pool("s", k); }
std::vector<Symbol> omega_symbols(std::size_t nk) { return named_pool("w", nk); }
std::vector<Symbol> alpha_symbols(std::size_t n) { return named_pool("a", n); }

std::vector<SpectralParam> to_params(std::span<const Symbol> syms) {
  std::vector<SpectralParam> out;
  out.reserve(syms.size());
  for (const Symbol& s : syms) out.push_back(SpectralParam::symbol(s));
  return out;
}

std::vector<SpectralParam> to_params(const std::vector<Rational>& values) {
  std::vector<SpectralParam> out;
  out.reserve(values.size());
  for (const Rational& r : values) out.push_back(SpectralParam::rational(r));
  return out;
}

GrothClassExpr::GrothClassExpr(LaurentPoly poly, std::vector<Symbol> sigma,
                               std::vector<Symbol> omega)
    : poly_(std::move(poly)), sigma_(std::move(sigma)), omega_(std::move(omega)) {
  if (!symmetric_in(poly_, sigma_))
    throw argument_error("class is not symmetric in the sigma alphabet");
  if (!symmetric_in(poly_, omega_))
    throw argument_error("class is not symmetric in the omega alphabet");
}

AlphaAssignment AlphaAssignment::symbols(int n) {
  AlphaAssignment a;
  a.values = to_params(alpha_symbols(n));
  return a;
}

AlphaAssignment AlphaAssignment::rationals(const std::vector<Rational>& v) {
  AlphaAssignment a;
  a.values = to_params(v);
  a.validate();
  return a;
}

void AlphaAssignment::validate() const {
  if (!pairwise_distinct(values))
    throw distinctness_error("alpha values must be pairwise distinct");
}

RatFunc localization_pushforward(const GrothClassExpr& f,
                                 const AlphaAssignment& alpha) {
  alpha.validate();
  const int n = f.n();
  const int k = f.k();
  if (alpha.size() != n)
    throw argument_error("alpha assignment size must match the class rank");
  std::span<const SpectralParam> av(alpha.values);
  const LaurentPoly vand = vandermonde(av);
  LaurentPoly numerator;
  for (const auto& s : k_subsets(n, k)) {
    std::map<SymId, LaurentPoly> assign;
    for (int i = 0; i < k; ++i)
      assign.emplace(f.sigma()[i].id(), alpha.values[s[i]].poly());
    const auto comp = subset_complement(s, n);
    for (int j = 0; j < n - k; ++j)
      assign.emplace(f.omega()[j].id(), alpha.values[comp[j]].poly());
    LaurentPoly f_s = f.poly().substitute_poly(assign);
    if (f_s.is_zero()) continue;
    numerator += f_s * complement_power(av, s, k) *
                 exact_div(vand, separating_product(av, s));
  }
  return RatFunc(std::move(numerator), vand);
}

GrothClassExpr class_g(const PushforwardParams& p) {
  p.validate();
  const std::vector<Symbol> sig = sigma_symbols(p.k);
  const std::vector<Symbol> ome = omega_symbols(p.n - p.k);
  const auto sig_params = to_params(sig);
  const auto ome_params = to_params(ome);
  LaurentPoly acc;
  for (const Partition& nu : enumerate_in_box(p.l, p.m - p.l)) {
    LaurentPoly left = skew_multi(p.lambda, nu, sig_params);
    if (left.is_zero()) continue;
    LaurentPoly right = skew_multi(prepend_rect(nu, p.n - p.k, p.m - p.l),
                                   p.mu, ome_params);
    if (right.is_zero()) continue;
    acc += left * right;
  }
  return GrothClassExpr(std::move(acc), sig, ome);
}

std::vector<Rational> draw_distinct_rationals(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> num(1, 50), den(1, 50);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r = frac(num(rng), den(rng));
    if (r == 1) continue;
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Partition pushforward_target(const PushforwardParams& p) {
  return prepend_rect(p.lambda, p.n - p.k, p.m - p.k - p.l);
}

}  // namespace

CheckOutcome verify_pushforward(const PushforwardParams& p, Mode mode,
                                int trials, std::uint64_t seed) {
  p.validate();
  CheckOutcome out;
  const GrothClassExpr g = class_g(p);
  const Partition target = pushforward_target(p);
  if (mode == Mode::Symbolic) {
    const AlphaAssignment alpha = AlphaAssignment::symbols(p.n);
    RatFunc lhs = localization_pushforward(g, alpha);
    auto lhs_poly = lhs.try_polynomial();
    LaurentPoly rhs = skew_multi(target, p.mu, alpha.values);
    out.ok = lhs_poly && *lhs_poly == rhs;
    out.lhs = lhs_poly ? lhs_poly->to_string() : lhs.to_string();
    out.rhs = rhs.to_string();
    return out;
  }
  if (trials < 1) throw argument_error("sample mode needs trials >= 1");
  std::mt19937_64 rng(seed);
  std::string ls, rs;
  for (int t = 0; t < trials; ++t) {
    const auto values = draw_distinct_rationals(rng, p.n);
    const AlphaAssignment alpha = AlphaAssignment::rationals(values);
    RatFunc lhs = localization_pushforward(g, alpha);
    LaurentPoly rhs = skew_multi(target, p.mu, alpha.values);
    const bool same = lhs == RatFunc(rhs);
    if (!ls.empty()) {
      ls += ";";
      rs += ";";
    }
    ls += lhs.to_string();
    rs += rhs.to_string();
    if (!same) out.ok = false;
  }
  out.lhs = ls;
  out.rhs = rs;
  return out;
}

CheckOutcome verify_operator_expansion(const PushforwardParams& p) {
  p.validate();
  CheckOutcome out;
  const PositionSeq x = partition_to_positions(p.mu, p.l, p.m);
  const PositionSeq y = partition_to_positions(p.lambda, p.l + p.k, p.m);
  std::vector<SpectralParam> u = to_params(named_pool("u", p.n));
  const LaurentPoly vand = vandermonde(u);

  LaurentPoly lhs =
      partition_function(PartitionFunctionKind::ZDB, p.m, p.n, p.k, x, y, u) *
      vand;

  LaurentPoly rhs;
  for (const auto& s : k_subsets(p.n, p.k)) {
    std::vector<SpectralParam> reordered;
    for (int i : s) reordered.push_back(u[i]);
    for (int j : subset_complement(s, p.n)) reordered.push_back(u[j]);
    LaurentPoly zbd = partition_function(PartitionFunctionKind::ZBD, p.m, p.n,
                                         p.k, x, y, reordered);
    if (zbd.is_zero()) continue;
    rhs += zbd * complement_power(u, s, p.k) *
           exact_div(vand, separating_product(u, s));
  }
  out.ok = lhs == rhs;
  out.lhs = lhs.to_string();
  out.rhs = rhs.to_string();
  return out;
}

namespace {

Rational groth_det_at(const Partition& lambda,
                      const std::vector<Rational>& z) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(lambda.length()) > n)
    return Rational(lambda.is_empty() && n == 0 ? 1 : 0);
  if (n == 0) return Rational(1);
  RingMatrix mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational zi = z[i];
      Rational e = 1;
      for (int t = 0; t < lambda.part(j + 1) + n - (j + 1); ++t) e *= zi;
      Rational om = 1;
      for (int t = 0; t < j; ++t) om *= (1 - zi);
      mat.at(i, j) = LaurentPoly::constant(e * om);
    }
  Rational det = determinant(mat).constant_value();
  Rational vand = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vand *= (z[i] - z[j]);
  return det / vand;
}

CheckOutcome guo_sun_with_rect(const Partition& lambda, int m, int k, int n,
                               int rect_width, Mode mode, int trials,
                               std::uint64_t seed) {
  if (k < 0 || k > n) throw argument_error("need 0 <= k <= n");
  if (!lambda.fits_box(k, m - k))
    throw argument_error("lambda outside the (m-k)^k box");
  CheckOutcome out;
  const Partition lhs_shape = prepend_rect(lambda, n - k, rect_width);
  if (mode == Mode::Symbolic) {
    const std::vector<Symbol> z = z_symbols(n);
    const auto zp = to_params(z);
    std::span<const SpectralParam> zv(zp);
    const LaurentPoly vand = vandermonde(zv);
    LaurentPoly lhs = groth_det(lhs_shape, z) * vand;
    LaurentPoly rhs;
    for (const auto& s : k_subsets(n, k)) {
      std::vector<Symbol> zsub;
      for (int i : s) zsub.push_back(z[i]);
      LaurentPoly gl = groth_det(lambda, zsub);
      if (gl.is_zero()) continue;
      LaurentPoly w = LaurentPoly::one();
      for (int i : s)
        w = w * (LaurentPoly::one() - LaurentPoly::variable(z[i])).pow(n - k);
      for (int j : subset_complement(s, n))
        w = w * LaurentPoly::variable(z[j]).pow(m);
      rhs += gl * w * exact_div(vand, separating_product(zv, s));
    }
    out.ok = lhs == rhs;
    out.lhs = lhs.to_string();
    out.rhs = rhs.to_string();
    return out;
  }
  if (trials < 1) throw argument_error("sample mode needs trials >= 1");
  std::mt19937_64 rng(seed);
  std::string ls, rs;
  for (int t = 0; t < trials; ++t) {
    const std::vector<Rational> z = draw_distinct_rationals(rng, n);
    Rational lhs = groth_det_at(lhs_shape, z);
    Rational rhs = 0;
    for (const auto& s : k_subsets(n, k)) {
      std::vector<Rational> zsub;
      for (int i : s) zsub.push_back(z[i]);
      Rational term = groth_det_at(lambda, zsub);
      for (int i : s)
        for (int e = 0; e < n - k; ++e) term *= (1 - z[i]);
      for (int j : subset_complement(s, n))
        for (int e = 0; e < m; ++e) term *= z[j];
      Rational d = 1;
      for (int i : s)
        for (int j : subset_complement(s, n)) d *= (z[j] - z[i]);
      rhs += term / d;
    }
    if (!ls.empty()) {
      ls += ";";
      rs += ";";
    }
    ls += lhs.get_str();
    rs += rhs.get_str();
    if (lhs != rhs) out.ok = false;
  }
  out.lhs = ls;
  out.rhs = rs;
  return out;
}

}  // namespace

CheckOutcome guo_sun_check(const Partition& lambda, int m, int k, int n,
                           Mode mode, int trials, std::uint64_t seed) {
  return guo_sun_with_rect(lambda, m, k, n, m - k, mode, trials, seed);
}

CheckOutcome guo_sun_printed_form(const Partition& lambda, int m, int k,
                                  int n) {
  return guo_sun_with_rect(lambda, m, k, n, m, Mode::Symbolic, 1, 1);
}

const char* special_case_name(SpecialCase c) {
  switch (c) {
    case SpecialCase::PushSpecialization:
      return "push-specialization";
    case SpecialCase::DualProjectiveLine:
      return "dual-projective-line";
    case SpecialCase::BuchGrassmannProduct:
      return "buch-grassmann-product";
    case SpecialCase::ResidueSkewCorollary:
      return "residue-skew-corollary";
    case SpecialCase::ResidueNonskew:
      return "residue-nonskew";
    case SpecialCase::ResidueUnit:
      return "residue-unit";
  }
  throw internal_error("bad special case");
}

namespace {

CheckOutcome residue_vs_closed_form(const PushforwardParams& p, int trials,
                                    std::uint64_t seed) {
  p.validate();
  CheckOutcome out;
  const GrothClassExpr g = class_g(p);
  const Partition target = prepend_rect(p.lambda, p.n - p.k, p.m - p.k - p.l);
  std::mt19937_64 rng(seed);
  std::string ls, rs;
  for (int t = 0; t < trials; ++t) {
    const auto values = draw_distinct_rationals(rng, p.n);
    const AlphaAssignment alpha = AlphaAssignment::rationals(values);
    RatFunc lhs = residue_pushforward(g, alpha);
    LaurentPoly rhs = skew_multi(target, p.mu, alpha.values);
    if (!ls.empty()) {
      ls += ";";
      rs += ";";
    }
    ls += lhs.to_string();
    rs += rhs.to_string();
    if (!(lhs == RatFunc(rhs))) out.ok = false;
  }
  out.lhs = ls;
  out.rhs = rs;
  return out;
}

}  // namespace

CheckOutcome special_case_suite(SpecialCase c, const SpecialCaseArgs& args) {
  CheckOutcome out;
  switch (c) {
    case SpecialCase::PushSpecialization: {
      PushforwardParams p{args.m, args.n, args.k, 0, args.lambda, Partition()};
      return verify_pushforward(p, args.mode, args.trials, args.seed);
    }
    case SpecialCase::DualProjectiveLine: {
      const int n = args.n, m = args.m;
      if (m < n - 1) throw argument_error("needs m >= n - 1");
      const std::vector<Symbol> sig = sigma_symbols(n - 1);
      const std::vector<Symbol> ome = omega_symbols(1);
      LaurentPoly f =
          (LaurentPoly::one() - LaurentPoly::variable(ome[0], -1)).pow(m);
      GrothClassExpr cls(std::move(f), sig, ome);
      const Partition target =
          m - n + 1 > 0 ? Partition({m - n + 1}) : Partition();
      if (args.mode == Mode::Symbolic) {
        const AlphaAssignment alpha = AlphaAssignment::symbols(n);
        RatFunc lhs = localization_pushforward(cls, alpha);
        auto lhs_poly = lhs.try_polynomial();
        LaurentPoly rhs = skew_multi(target, Partition(), alpha.values);
        out.ok = lhs_poly && *lhs_poly == rhs;
        out.lhs = lhs_poly ? lhs_poly->to_string() : lhs.to_string();
        out.rhs = rhs.to_string();
        return out;
      }
      std::mt19937_64 rng(args.seed);
      std::string ls, rs;
      for (int t = 0; t < args.trials; ++t) {
        const auto values = draw_distinct_rationals(rng, n);
        const AlphaAssignment alpha = AlphaAssignment::rationals(values);
        RatFunc lhs = localization_pushforward(cls, alpha);
        LaurentPoly rhs = skew_multi(target, Partition(), alpha.values);
        if (!ls.empty()) {
          ls += ";";
          rs += ";";
        }
        ls += lhs.to_string();
        rs += rhs.to_string();
        if (!(lhs == RatFunc(rhs))) out.ok = false;
      }
      out.lhs = ls;
      out.rhs = rs;
      return out;
    }
    case SpecialCase::BuchGrassmannProduct: {
      // The product class built directly, localized, and compared both
      // with the closed form and with the general pushforward output.
      const int n = args.n, k = args.k, m = args.m;
      PushforwardParams p{m, n, k, 0, args.lambda, Partition()};
      p.validate();
      const std::vector<Symbol> sig = sigma_symbols(k);
      const std::vector<Symbol> ome = omega_symbols(n - k);
      LaurentPoly f =
          skew_multi(args.lambda, Partition(), to_params(sig)) *
          skew_multi(prepend_rect(Partition(), n - k, m), Partition(),
                     to_params(ome));
      GrothClassExpr cls(std::move(f), sig, ome);
      const AlphaAssignment alpha = AlphaAssignment::symbols(n);
      RatFunc lhs = localization_pushforward(cls, alpha);
      auto lhs_poly = lhs.try_polynomial();
      LaurentPoly rhs = skew_multi(prepend_rect(args.lambda, n - k, m - k),
                                   Partition(), alpha.values);
      CheckOutcome general = verify_pushforward(p, Mode::Symbolic, 1, args.seed);
      out.ok = lhs_poly && *lhs_poly == rhs && general.ok &&
               general.rhs == rhs.to_string();
      out.lhs = lhs_poly ? lhs_poly->to_string() : lhs.to_string();
      out.rhs = rhs.to_string();
      return out;
    }
    case SpecialCase::ResidueSkewCorollary: {
      PushforwardParams p{args.m,      args.n, args.k,
                          args.l,      args.lambda, args.mu};
      return residue_vs_closed_form(p, args.trials, args.seed);
    }
    case SpecialCase::ResidueNonskew: {
      PushforwardParams p{args.m, args.n, args.k, 0, args.lambda, Partition()};
      return residue_vs_closed_form(p, args.trials, args.seed);
    }
    case SpecialCase::ResidueUnit: {
      PushforwardParams p{args.k, args.n, args.k, 0, Partition(), Partition()};
      CheckOutcome res;
      std::mt19937_64 rng(args.seed);
      std::string ls;
      for (int t = 0; t < args.trials; ++t) {
        const auto values = draw_distinct_rationals(rng, args.n);
        const AlphaAssignment alpha = AlphaAssignment::rationals(values);
        RatFunc lhs = residue_pushforward(class_g(p), alpha);
        if (!ls.empty()) ls += ";";
        ls += lhs.to_string();
        if (!(lhs == RatFunc(LaurentPoly::one()))) res.ok = false;
      }
      res.lhs = ls;
      res.rhs = "1";
      return res;
    }
  }
  throw internal_error("bad special case");
}

}  // namespace gkp
