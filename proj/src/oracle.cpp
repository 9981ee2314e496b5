#include "relsig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace relsig {

namespace {

void check_module_args(const StructureFunction& phi, Mask module_set,
                       unsigned k) {
  if (module_set == 0 || (module_set & ~phi.components()))
    throw std::invalid_argument("module set must be a nonempty subset of C");
  if (k < 1 || k > popcount(module_set))
    throw std::out_of_range("rank k must be in 1..|M|");
}

void require_enum(const StructureFunction& phi, const char* what) {
  if (phi.component_count() > kEnumGuard)
    throw SizeGuardError(std::string(what) +
                         ": n exceeds the 2^n enumeration bound");
}

}  // namespace

Rational subsig_by_subset_sums(const StructureFunction& phi, Mask module_set,
                               unsigned k) {
  require_enum(phi, "subsig_by_subset_sums");
  check_module_args(phi, module_set, k);
  const unsigned n = phi.component_count();
  const unsigned m = popcount(module_set);
  // Bucket phi by |A| within the two |M & A| slices; the weights depend on
  // |A| only.
  std::vector<std::int64_t> upper(n + 1, 0), lower(n + 1, 0);
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < states; ++a) {
    if (!phi.evaluate(a)) continue;
    const unsigned in_m = popcount(a & module_set);
    if (in_m == m - k + 1)
      ++upper[popcount(a)];
    else if (in_m == m - k)
      ++lower[popcount(a)];
  }
  Rational sum = 0;
  for (unsigned size = 1; size <= n; ++size)
    if (upper[size] != 0)
      sum += Rational(Int(upper[size]) * (m - k + 1)) /
             Rational(Int(n) * binomial(n - 1, size - 1));
  for (unsigned size = 0; size <= n; ++size)
    if (lower[size] != 0)
      sum -= Rational(Int(lower[size]) * k) /
             Rational(Int(n) * binomial(n - 1, size));
  return sum;
}

Rational subsig_by_marginal_contributions(const StructureFunction& phi,
                                          Mask module_set, unsigned k) {
  require_enum(phi, "subsig_by_marginal_contributions");
  check_module_args(phi, module_set, k);
  const unsigned n = phi.component_count();
  std::vector<std::int64_t> deltas(n, 0);  // indexed by |A|
  for (unsigned j : components_from_mask(module_set)) {
    const Mask j_bit = Mask{1} << (j - 1);
    const Mask space = phi.components() & ~j_bit;
    Mask a = space;
    while (true) {
      if (popcount(module_set & ~a) == k) {
        const int delta =
            int(phi.evaluate(a | j_bit)) - int(phi.evaluate(a));
        if (delta != 0) deltas[popcount(a)] += delta;
      }
      if (a == 0) break;
      a = (a - 1) & space;
    }
  }
  Rational sum = 0;
  for (unsigned size = 0; size < n; ++size)
    if (deltas[size] != 0)
      sum += Rational(Int(deltas[size])) /
             Rational(Int(n) * binomial(n - 1, size));
  return sum;
}

PermutationTally tally_permutations(const StructureFunction& phi,
                                    Mask module_set) {
  const unsigned n = phi.component_count();
  if (n > kPermGuard)
    throw SizeGuardError("tally_permutations: n = " + std::to_string(n) +
                         " exceeds the n! bound of n = " +
                         std::to_string(kPermGuard));
  if (module_set == 0 || (module_set & ~phi.components()))
    throw std::invalid_argument("module set must be a nonempty subset of C");
  const auto table = truth_table(phi);
  const unsigned m = popcount(module_set);
  PermutationTally tally{std::vector<Int>(m, Int(0)), factorial(n)};
  std::vector<std::uint8_t> order(n);
  std::iota(order.begin(), order.end(), std::uint8_t{0});
  do {
    Mask alive = phi.components();
    unsigned failed_in_m = 0;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned c = order[i];
      const bool in_m = (module_set >> c) & 1;
      alive &= ~(Mask{1} << c);
      if (in_m) ++failed_in_m;
      if (!table[alive]) {  // the removal of c took the system down
        if (in_m) tally.counts[failed_in_m - 1] += 1;
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return tally;
}

Subsignature subsig_by_permutations(const StructureFunction& phi,
                                    Mask module_set) {
  const PermutationTally tally = tally_permutations(phi, module_set);
  Subsignature s;
  s.module_set = module_set;
  s.values.reserve(tally.counts.size());
  for (const Int& count : tally.counts)
    s.values.push_back(Rational(count) / Rational(tally.total));
  return s;
}

McResult subsig_monte_carlo(const StructureFunction& phi, Mask module_set,
                            std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (module_set == 0 || (module_set & ~phi.components()))
    throw std::invalid_argument("module set must be a nonempty subset of C");
  const unsigned n = phi.component_count();
  const unsigned m = popcount(module_set);
  std::vector<bool> table;
  if (n <= kEnumGuard) table = truth_table(phi);
  const auto state = [&](Mask alive) {
    return table.empty() ? phi.evaluate(alive) : bool(table[alive]);
  };

  // Fisher-Yates with raw modulo draws keeps the stream identical across
  // standard libraries; the bias at n <= 64 is far below statistical noise.
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> order(n);
  std::vector<std::uint64_t> counts(m, 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    for (unsigned i = n - 1; i > 0; --i)
      std::swap(order[i], order[rng() % (i + 1)]);
    Mask alive = phi.components();
    unsigned failed_in_m = 0;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned c = order[i];
      const bool in_m = (module_set >> c) & 1;
      alive &= ~(Mask{1} << c);
      if (in_m) ++failed_in_m;
      if (!state(alive)) {
        if (in_m) ++counts[failed_in_m - 1];
        break;
      }
    }
  }

  McResult result;
  result.trials = trials;
  result.seed = seed;
  result.rng_id = "mt19937_64+fisher-yates";
  result.entries.reserve(m);
  for (unsigned k = 0; k < m; ++k) {
    const double p = double(counts[k]) / double(trials);
    result.entries.push_back({p, std::sqrt(p * (1.0 - p) / double(trials))});
  }
  return result;
}

}  // namespace relsig
