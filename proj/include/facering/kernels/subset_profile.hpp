#pragma once

#include <cstdint>
#include <vector>

#include "facering/simplicial.hpp"

namespace facering::kernels {

/// Signed inclusion–exclusion profile of a family of sets: entry k holds
/// sum over nonempty subfamilies T with |∩T| = k of (-1)^{|T|+1}.
/// The result has `universe_size + 1` entries.
using SubsetProfile = std::vector<std::int64_t>;

/// Reference: visits all 2^n - 1 subfamilies and intersects from scratch.
SubsetProfile subset_profile_serial(const std::vector<VertexSet>& sets,
                                    std::size_t universe_size);

/// Depth-first enumeration with incremental intersections; subfamilies whose
/// intersection is already empty are collapsed analytically (their signed
/// extensions cancel). Work is split over OpenMP threads by the membership
/// pattern of the first few sets.
SubsetProfile subset_profile_parallel(const std::vector<VertexSet>& sets,
                                      std::size_t universe_size);

}  // namespace facering::kernels
