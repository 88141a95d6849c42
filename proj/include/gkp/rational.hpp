#pragma once

#include <gmpxx.h>

#include <string>

#include "gkp/errors.hpp"

namespace gkp {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator. All coefficient arithmetic in the library runs
/// over this type; there is no floating point anywhere.
using Rational = mpq_class;

/// Build n/d in canonical form. mpq_class(n, d) alone does not reduce.
inline Rational frac(long n, long d = 1) {
  if (d == 0) throw division_by_zero_error("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gkp
