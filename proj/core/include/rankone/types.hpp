#pragma once

#include <compare>
#include <cstdint>

namespace rankone {

using Label = std::int32_t;

// Minimum number of edges on a downward path from a vertex to a leaf.
struct Rank {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Rank, Rank) = default;
};

}  // namespace rankone
