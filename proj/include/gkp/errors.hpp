#pragma once

#include <stdexcept>
#include <string>

namespace gkp {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero_error : error {
  using error::error;
};

/// exact_div was asked to divide by a non-factor.
struct inexact_division_error : error {
  using error::error;
};

/// A substitution sent a variable to a value where a denominator vanishes.
struct pole_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

struct argument_error : error {
  using error::error;
};

/// mu is not contained in lambda.
struct containment_error : error {
  using error::error;
};

/// A partition does not fit the requested chain or truncation box.
struct box_error : error {
  using error::error;
};

/// B-operator applied to a full chain.
struct sector_error : error {
  using error::error;
};

/// Grothendieck-root values must be pairwise distinct.
struct distinctness_error : error {
  using error::error;
};

/// A computation that is guaranteed exact by construction failed to be.
struct internal_error : error {
  using error::error;
};

}  // namespace gkp
