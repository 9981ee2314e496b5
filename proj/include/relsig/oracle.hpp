#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relsig/signatures.hpp"
#include "relsig/structure.hpp"
#include "relsig/subset.hpp"

namespace relsig {

/// Ground-truth implementations used to cross-check the polynomial
/// pipeline. These enumerate states or failure orders directly and are
/// never the primary compute path.

/// Permutation enumeration refuses to run past this many components (n!).
inline constexpr unsigned kPermGuard = 8;

/// Subset-sum formula over all 2^n states: the values of phi on the slices
/// |M & A| = m-k+1 and |M & A| = m-k, weighted by (m-k+1) / (n*C(n-1,|A|-1))
/// and k / (n*C(n-1,|A|)). Exact; n <= kEnumGuard.
Rational subsig_by_subset_sums(const StructureFunction& phi, Mask module_set,
                               unsigned k);

/// Marginal-contribution formula: for each j in M, the sum of
/// phi(A+{j}) - phi(A) over A avoiding j with |M \ A| = k, weighted by
/// 1 / (n*C(n-1,|A|)). Reduces to the Shapley-Shubik index for singletons.
/// Exact; n <= kEnumGuard.
Rational subsig_by_marginal_contributions(const StructureFunction& phi,
                                          Mask module_set, unsigned k);

/// Outcome of enumerating all n! failure orders: counts[k-1] holds the
/// number of orders whose fatal failure is the k-th failure among the
/// components of M.
struct PermutationTally {
  std::vector<Int> counts;
  Int total;  // n!
};

PermutationTally tally_permutations(const StructureFunction& phi,
                                    Mask module_set);

/// The tally normalized by n!: the definitional subsignature.
Subsignature subsig_by_permutations(const StructureFunction& phi,
                                    Mask module_set);

struct McEntry {
  double estimate;
  double std_error;  // binomial: sqrt(p(1-p)/trials)
};

struct McResult {
  std::vector<McEntry> entries;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng_id;
};

/// Seeded spot-check: samples uniformly random failure orders (the order
/// distribution any i.i.d. continuous lifetime model induces) and tallies
/// fatal ranks within M. Deterministic for a given seed; the generator
/// identifier is recorded in the result.
McResult subsig_monte_carlo(const StructureFunction& phi, Mask module_set,
                            std::uint64_t trials, std::uint64_t seed);

}  // namespace relsig
