#pragma once

#include <span>
#include <vector>

#include "gkp/laurent.hpp"
#include "gkp/symbol.hpp"

namespace gkp {

enum class SymKind { Elementary, Complete };

/// e_d or h_d in the given variables. Conventions: h_d = e_d = 0 for
/// d < 0, h_0 = e_0 = 1, e_d = 0 for d > #vars.
LaurentPoly symmetric_poly(SymKind kind, std::span<const Symbol> vars, int d);

LaurentPoly elementary_symmetric(std::span<const Symbol> vars, int d);
LaurentPoly complete_symmetric(std::span<const Symbol> vars, int d);

/// Generalized binomial: prod_{j=0}^{q-1}(p - j) / q!, for any integer p
/// and q >= 0. Always an integer.
Rational gen_binomial(long p, long q);

/// Twisted complete symmetric sum: sum_{l=0}^{i} C(i,l) (-1)^l h_{p+l}.
LaurentPoly h_twisted(int p, int i, std::span<const Symbol> vars);

}  // namespace gkp
