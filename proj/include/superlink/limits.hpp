#pragma once

#include <cstddef>

namespace superlink {

inline constexpr std::size_t kDefaultBoxCap = 1'000'000;
inline constexpr std::size_t kDefaultSubgroupCap = 10'080;
inline constexpr std::size_t kDefaultKlGroupCap = 40'320;

struct Limits {
  std::size_t box_cap = kDefaultBoxCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  std::size_t kl_group_cap = kDefaultKlGroupCap;
};

}  // namespace superlink
