#pragma once

#include <vector>

#include "relsig/polynomial.hpp"
#include "relsig/structure.hpp"
#include "relsig/subset.hpp"

namespace relsig {

/// Exact signature vector of a component subset M: values[k-1] is the
/// probability that the k-th failure among the components of M takes the
/// system down. For M = C this is the Samaniego signature; for a singleton
/// it is the Barlow-Proschan importance of that component.
struct Subsignature {
  Mask module_set = 0;
  std::vector<Rational> values;

  Rational total() const;
  bool operator==(const Subsignature&) const = default;
};

/// Generating polynomial of a subsignature: coefficient of x^k is
/// values[k-1] of the matching Subsignature; the constant term is zero.
struct SignatureGenFn {
  Mask module_set = 0;
  UniPoly gen;
  bool operator==(const SignatureGenFn&) const = default;
};

/// Intermediates of the univariate signature pipeline.
struct SignatureSteps {
  UniPoly h_diag;      // diagonal reliability polynomial h(x)
  UniPoly g;           // its derivative
  UniPoly g_reflected; // (n-1)-reflection of g
  UniPoly g_shifted;   // the reflection composed with x+1
};

/// Samaniego signature: s_k is the coefficient of x^(k-1) in the reflected,
/// shifted derivative of the diagonal reliability polynomial, normalized by
/// k*C(n,k). Avoids any 2^n enumeration.
Subsignature samaniego_signature(const MultilinearPoly& h,
                                 SignatureSteps* steps = nullptr);

/// Intermediates of the bivariate subsignature pipeline.
struct SubsignatureSteps {
  BiPoly h_xz;         // identified reliability polynomial h(x, z)
  BiPoly g_xz;         // its x-derivative
  BiPoly g_reflected;  // (m-1)-reflection in x
  BiPoly g_shifted;    // the reflection composed with x+1
  std::vector<UniPoly> c;  // c[k-1] = rank-k coefficient polynomial in z
};

/// M-signature from the reliability polynomial alone: identify the module
/// variables to x and the rest to z, differentiate in x, reflect and shift,
/// then integrate each rank coefficient against t^(m-k) (1-t)^(k-1).
Subsignature subsignature(const MultilinearPoly& h, Mask module_set,
                          SubsignatureSteps* steps = nullptr);

/// Barlow-Proschan importance of a 1-indexed component: the integral over
/// [0,1] of the diagonal section of the matching partial derivative of h.
Rational barlow_proschan(const MultilinearPoly& h, unsigned component);

/// Rank-k coefficient polynomial extracted directly from the reflected,
/// shifted derivative (the same c_{k-1}(z) the subsignature pipeline uses).
UniPoly c_coefficient_direct(const BiPoly& g, unsigned k, unsigned m);

enum class TaylorCenter { at_one, at_zero };

/// Rank-k coefficient polynomial via the Taylor expansions of g around
/// x = 1 or x = 0: binomial-weighted sums of (1/i!) (d/dx)^i g evaluated at
/// the center. Both centers agree with c_coefficient_direct; the expansion
/// around 1 is short for small k, the one around 0 for small m-k.
UniPoly c_coefficient_taylor(const BiPoly& g, unsigned k, unsigned m,
                             TaylorCenter center);

/// Intermediates of the generating-function pipeline.
struct GenFnSteps {
  BiPoly h_xz;
  BiPoly g_xz;
  BiPoly g_reflected;
  TriPoly f;  // x times the reflection composed with x <- (t-1)x + 1
};

/// Generating function of the M-signature in one pass, without extracting
/// the rank coefficients: reflect f in t, identify z with t, and integrate
/// over [0,1].
SignatureGenFn genfunc(const MultilinearPoly& h, Mask module_set,
                       GenFnSteps* steps = nullptr);

/// M-signature through a modular factorization: the module's own signature
/// weighted by beta-distributed averages of the organizing structure's
/// macro derivative. Validates the split against phi first and throws
/// std::invalid_argument when it does not factor the system.
Subsignature subsignature_modular(const StructureFunction& phi,
                                  const ModuleSplit& split);

}  // namespace relsig
