#include "relsig/subset.hpp"

#include <stdexcept>
#include <string>

namespace relsig {

Mask mask_from_components(const std::vector<unsigned>& components) {
  Mask set = 0;
  for (unsigned c : components) {
    if (c < 1 || c > kMaxComponents)
      throw std::invalid_argument("component index out of range: " +
                                  std::to_string(c));
    set |= Mask{1} << (c - 1);
  }
  return set;
}

std::vector<unsigned> components_from_mask(Mask set) {
  std::vector<unsigned> out;
  out.reserve(popcount(set));
  for (unsigned b = 0; set; ++b, set >>= 1)
    if (set & 1) out.push_back(b + 1);
  return out;
}

std::uint64_t submask_index(Mask sub, Mask space) {
  std::uint64_t index = 0;
  unsigned out = 0;
  for (Mask bit = 1; space; bit <<= 1) {
    if (space & bit) {
      if (sub & bit) index |= std::uint64_t{1} << out;
      ++out;
      space &= ~bit;
    }
  }
  return index;
}

Mask nth_submask(std::uint64_t index, Mask space) {
  Mask out = 0;
  for (Mask bit = 1; space; bit <<= 1) {
    if (space & bit) {
      if (index & 1) out |= bit;
      index >>= 1;
      space &= ~bit;
    }
  }
  return out;
}

}  // namespace relsig
