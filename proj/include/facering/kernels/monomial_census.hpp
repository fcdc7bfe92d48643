#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "facering/simplicial.hpp"

namespace facering::kernels {

/// Counts of face-supported monomials per total degree, split by whether some
/// exponent reaches `threshold`. by_degree[D][1] counts monomials of degree D
/// with max exponent >= threshold, by_degree[D][0] the rest.
struct MonomialCensus {
  std::int64_t threshold = 1;
  std::vector<std::array<std::int64_t, 2>> by_degree;
};

/// `faces` must list every face of the complex (the empty face included) once.
/// Each degree layer streams the exponent vectors with exact support F, for
/// every face F, one composition at a time.
MonomialCensus monomial_census_serial(const std::vector<VertexSet>& faces,
                                      std::int64_t threshold, std::int64_t max_degree);

/// Same census with degree layers distributed over OpenMP threads.
MonomialCensus monomial_census_parallel(const std::vector<VertexSet>& faces,
                                        std::int64_t threshold, std::int64_t max_degree);

}  // namespace facering::kernels
