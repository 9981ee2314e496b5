#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace relsig {

/// Component subsets as bitmasks: bit b (0-based) holds component b+1.
/// All public interfaces speak 1-indexed component numbers; masks are the
/// internal currency.
using Mask = std::uint64_t;

inline constexpr unsigned kMaxComponents = 64;

/// Operations that enumerate all 2^n states refuse to run past this bound.
inline constexpr unsigned kEnumGuard = 24;

constexpr Mask full_mask(unsigned n) {
  return n >= kMaxComponents ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr unsigned popcount(Mask set) {
  return static_cast<unsigned>(std::popcount(set));
}

/// True when 1-indexed `component` belongs to `set`.
constexpr bool contains(Mask set, unsigned component) {
  return (set >> (component - 1)) & Mask{1};
}

Mask mask_from_components(const std::vector<unsigned>& components);

/// Ascending 1-indexed component list.
std::vector<unsigned> components_from_mask(Mask set);

/// Packs the bits of `sub` (a submask of `space`) into a dense index in
/// [0, 2^|space|), preserving bit order.
std::uint64_t submask_index(Mask sub, Mask space);

/// Inverse of submask_index: spreads the low |space| bits of `index` onto
/// the set bits of `space`.
Mask nth_submask(std::uint64_t index, Mask space);

}  // namespace relsig
