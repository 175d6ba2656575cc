#pragma once

#include <cstddef>
#include <vector>

namespace reconfig {

// Hash for state vectors (paths, token sets) used by visited-set searches.
struct VecIntHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned int>(x)) +
           0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace reconfig
