#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/subset.hpp"

namespace relsig {

/// Inclusion-exclusion over minimal path sets refuses to expand more than
/// this many sets (2^|paths| terms).
inline constexpr unsigned kPathGuard = 20;

/// Semicoherent structure function of an n-component system, held as the
/// antichain of minimal path sets, a full truth table, or both. Immutable
/// after construction.
class StructureFunction {
 public:
  /// Builds from path sets (each a nonempty component mask). Duplicates are
  /// dropped and supersets reduced away, so the stored list is the antichain;
  /// the induced function is unchanged by either cleanup. The result is
  /// semicoherent by construction.
  static StructureFunction from_min_path_sets(unsigned n,
                                              std::vector<Mask> paths);

  /// Builds from a full truth table (table[mask] = phi(mask), little-endian
  /// in the component index; n <= kEnumGuard). The table is taken as-is so
  /// that validation can report on defective inputs; minimal path sets are
  /// derived only when the table is semicoherent.
  static StructureFunction from_truth_table(unsigned n,
                                            std::vector<bool> table);

  unsigned component_count() const { return n_; }
  Mask components() const { return full_mask(n_); }

  /// Antichain in canonical order (ascending size, then component order).
  /// Empty only for a non-semicoherent truth-table input.
  const std::vector<Mask>& min_path_sets() const { return paths_; }

  bool has_truth_table() const { return !table_.empty(); }

  /// phi(a): truth-table lookup when available, otherwise a path-set scan.
  bool evaluate(Mask a) const;

 private:
  StructureFunction(unsigned n, std::vector<Mask> paths,
                    std::vector<bool> table)
      : n_(n), paths_(std::move(paths)), table_(std::move(table)) {}

  unsigned n_ = 0;
  std::vector<Mask> paths_;
  std::vector<bool> table_;
};

/// Materialized truth table (2^n entries); n <= kEnumGuard.
std::vector<bool> truth_table(const StructureFunction& phi);

struct MonotonicityViolation {
  Mask set;            // phi(set) = 1 ...
  unsigned component;  // ... but phi(set + {component}) = 0
  bool operator==(const MonotonicityViolation&) const = default;
};

struct ValidationReport {
  bool zero_at_empty = false;
  bool one_at_full = false;
  std::vector<MonotonicityViolation> violations;
  bool valid() const {
    return zero_at_empty && one_at_full && violations.empty();
  }
};

/// Full 2^n scan for monotonicity and boundary conditions; n <= kEnumGuard.
ValidationReport validate_semicoherent(const StructureFunction& phi);

/// Reliability polynomial in standard multilinear form. Dispatches to the
/// path-set route when |paths| <= kPathGuard, otherwise to the truth-table
/// route when n <= kEnumGuard.
MultilinearPoly reliability_polynomial(const StructureFunction& phi);

/// Inclusion-exclusion over nonempty families of minimal path sets, with
/// like monomials collected. Guarded at kPathGuard path sets.
MultilinearPoly reliability_polynomial_paths(const StructureFunction& phi);

/// Moebius transform of the truth table: d(A) as the alternating subset sum
/// of phi over subsets of A. Guarded at n <= kEnumGuard.
MultilinearPoly reliability_polynomial_mobius(const StructureFunction& phi);

/// A factorization of a system through a macro-component: the module
/// structure `chi` lives on the components of `module_set` (ascending
/// order), and the organizing structure `psi` lives on the remaining
/// components (ascending order) plus one macro component at the 1-indexed
/// position `macro_index`.
struct ModuleSplit {
  Mask module_set = 0;
  StructureFunction chi;
  StructureFunction psi;
  unsigned macro_index = 0;
};

/// The system whose state is psi applied to (chi of the module components,
/// the remaining components). Table-backed; component count is inferred
/// from the split.
StructureFunction compose(const ModuleSplit& split);

/// True when the split reproduces phi at every one of the 2^n states.
bool verify_module_split(const StructureFunction& phi,
                         const ModuleSplit& split);

/// Decides whether `module_set` is modular and returns the factorization if
/// so. A set is modular exactly when every section of phi over the module
/// components (outer components pinned) is constant or equals one common
/// nonconstant function, which then serves as chi. When phi ignores the
/// module entirely any chi works; the series structure is returned.
/// Requires a semicoherent phi and n <= kEnumGuard.
std::optional<ModuleSplit> find_module(const StructureFunction& phi,
                                       Mask module_set);

/// All nonempty modular sets with their factorizations; n <= 12.
std::vector<ModuleSplit> modular_sets(const StructureFunction& phi);

/// Parses the plain-text description: first line "n=<count>", then one
/// path set per line as comma-separated 1-indexed components.
StructureFunction parse_system_text(std::string_view text);

/// Parses the JSON description: {"n": 5, "paths": [[1,4],...]} or
/// {"n": k, "table": "<2^k bits>"}.
StructureFunction parse_system_json(const std::string& text);

/// Loads either format, sniffing JSON by a leading '{'.
StructureFunction load_system(const std::filesystem::path& path);

}  // namespace relsig
