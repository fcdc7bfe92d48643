#include "facering/kernels/monomial_census.hpp"

#include <algorithm>

#include <omp.h>

namespace facering::kernels {
namespace {

// Walks all exponent vectors with `slots` positive entries summing to
// `remaining`, tallying by whether the largest entry reaches the threshold.
void walk(int slots, std::int64_t remaining, std::int64_t largest,
          std::int64_t threshold, std::array<std::int64_t, 2>& tally) {
  if (slots == 1) {
    ++tally[std::max(largest, remaining) >= threshold ? 1 : 0];
    return;
  }
  for (std::int64_t part = 1; part <= remaining - (slots - 1); ++part) {
    walk(slots - 1, remaining - part, std::max(largest, part), threshold, tally);
  }
}

std::array<std::int64_t, 2> layer(const std::vector<VertexSet>& faces,
                                  std::int64_t threshold, std::int64_t degree) {
  std::array<std::int64_t, 2> tally{0, 0};
  for (VertexSet face : faces) {
    const int size = cardinality(face);
    if (size == 0) {
      if (degree == 0) ++tally[threshold <= 0 ? 1 : 0];
      continue;
    }
    if (size > degree) continue;
    walk(size, degree, 0, threshold, tally);
  }
  return tally;
}

}  // namespace

MonomialCensus monomial_census_serial(const std::vector<VertexSet>& faces,
                                      std::int64_t threshold, std::int64_t max_degree) {
  MonomialCensus census;
  census.threshold = threshold;
  census.by_degree.resize(static_cast<std::size_t>(std::max<std::int64_t>(max_degree + 1, 0)));
  for (std::int64_t degree = 0; degree <= max_degree; ++degree) {
    census.by_degree[degree] = layer(faces, threshold, degree);
  }
  return census;
}

MonomialCensus monomial_census_parallel(const std::vector<VertexSet>& faces,
                                        std::int64_t threshold, std::int64_t max_degree) {
  MonomialCensus census;
  census.threshold = threshold;
  census.by_degree.resize(static_cast<std::size_t>(std::max<std::int64_t>(max_degree + 1, 0)));
  // High layers are the expensive ones; dynamic scheduling from the top keeps
  // threads balanced.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t step = 0; step <= max_degree; ++step) {
    const std::int64_t degree = max_degree - step;
    census.by_degree[degree] = layer(faces, threshold, degree);
  }
  return census;
}

}  // namespace facering::kernels
