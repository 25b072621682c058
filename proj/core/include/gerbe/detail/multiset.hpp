#pragma once

#include <cstddef>
#include <vector>

namespace gerbe::detail {

/// Calls fn(indices) for every nondecreasing index sequence of length n over
/// [0, universe), in lexicographic order. n = 0 yields one empty sequence.
template <typename Fn>
void for_each_multiset(std::size_t universe, std::size_t n, Fn&& fn) {
  if (n > 0 && universe == 0) return;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = n;
    while (i > 0 && idx[i - 1] + 1 == universe) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[i - 1];
  }
}

}  // namespace gerbe::detail
