#include "hypertrees/subsets.hpp"

#include <cstdint>
#include <stdexcept>

namespace hypertrees {

void for_each_combination(std::size_t total, std::size_t m,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (m > total) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == total - m + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_subset(std::size_t total, const std::function<void(std::uint64_t)>& fn) {
  if (total >= 64) throw std::invalid_argument("for_each_subset: ground set too large");
  const std::uint64_t end = std::uint64_t{1} << total;
  for (std::uint64_t mask = 0; mask < end; ++mask) fn(mask);
}

}  // namespace hypertrees
