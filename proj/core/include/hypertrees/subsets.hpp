#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hypertrees {

/// Visit every size-m subset of {0..total-1} in colex-compatible
/// (ascending index) order.
void for_each_combination(std::size_t total, std::size_t m,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

/// Visit every subset of {0..total-1} (total < 64) as a bitmask.
void for_each_subset(std::size_t total, const std::function<void(std::uint64_t)>& fn);

}  // namespace hypertrees
