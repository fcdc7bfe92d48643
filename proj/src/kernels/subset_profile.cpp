#include "facering/kernels/subset_profile.hpp"

#include <algorithm>

#include <omp.h>

namespace facering::kernels {

SubsetProfile subset_profile_serial(const std::vector<VertexSet>& sets,
                                    std::size_t universe_size) {
  SubsetProfile profile(universe_size + 1, 0);
  const std::size_t n = sets.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    VertexSet inter = ~VertexSet{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) inter &= sets[i];
    }
    const int size = __builtin_popcountll(mask);
    profile[cardinality(inter)] += (size % 2 == 1) ? 1 : -1;
  }
  return profile;
}

namespace {

// Extends a subfamily with current intersection `inter` and parity `odd`
// (true when |T| is odd) by sets with index >= next.
void extend(const std::vector<VertexSet>& sets, std::size_t next, VertexSet inter,
            bool odd, SubsetProfile& profile) {
  const std::size_t n = sets.size();
  for (std::size_t j = next; j < n; ++j) {
    const VertexSet narrowed = inter & sets[j];
    const bool child_odd = !odd;
    if (narrowed == 0) {
      // Every extension of T + {j} also has empty intersection; the signed
      // sum over them vanishes unless there is nothing left to add.
      if (j + 1 == n) profile[0] += child_odd ? 1 : -1;
      continue;
    }
    profile[cardinality(narrowed)] += child_odd ? 1 : -1;
    extend(sets, j + 1, narrowed, child_odd, profile);
  }
}

}  // namespace

SubsetProfile subset_profile_parallel(const std::vector<VertexSet>& sets,
                                      std::size_t universe_size) {
  SubsetProfile profile(universe_size + 1, 0);
  const std::size_t n = sets.size();
  if (n == 0) return profile;
  const std::size_t split = std::min<std::size_t>(n, 10);
  const std::int64_t prefixes = std::int64_t{1} << split;

#pragma omp parallel
  {
    SubsetProfile local(universe_size + 1, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t prefix = 0; prefix < prefixes; ++prefix) {
      VertexSet inter = ~VertexSet{0};
      int members = 0;
      for (std::size_t i = 0; i < split; ++i) {
        if (prefix >> i & 1) {
          inter &= sets[i];
          ++members;
        }
      }
      const bool odd = members % 2 == 1;
      if (members > 0) {
        if (inter == 0) {
          if (split == n) local[0] += odd ? 1 : -1;
          continue;
        }
        local[cardinality(inter)] += odd ? 1 : -1;
      }
      extend(sets, split, inter, odd, local);
    }
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) profile[k] += local[k];
  }
  return profile;
}

}  // namespace facering::kernels
