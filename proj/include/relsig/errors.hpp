#pragma once

#include <stdexcept>

namespace relsig {

/// A system description (text or JSON) could not be understood.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration-based operation was asked to exceed its documented size
/// bound (2^n scans, path-set expansions, permutation enumerations).
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structure function violates monotonicity or the boundary conditions
/// phi(empty) = 0, phi(all) = 1.
struct SemicoherenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relsig
