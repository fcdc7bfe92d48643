#include "facering/oracle.hpp"

#include <algorithm>

#include "facering/errors.hpp"
#include "facering/kernels/monomial_census.hpp"

namespace facering {
namespace {

kernels::MonomialCensus census(const SimplicialComplex& complex, std::int64_t threshold,
                               std::int64_t degree_cap, const OracleOptions& options) {
  const MonomialBound bound{degree_cap};
  const Integer candidates = bound.candidates(complex);
  if (candidates > Integer(static_cast<long>(options.budget))) {
    throw Error(ErrorCode::BudgetExceeded,
                "oracle would enumerate " + candidates.get_str() +
                    " monomials, budget is " + std::to_string(options.budget));
  }
  const auto faces = complex.faces();
  return options.execution == Execution::Serial
             ? kernels::monomial_census_serial(faces, threshold, degree_cap)
             : kernels::monomial_census_parallel(faces, threshold, degree_cap);
}

bool in_frobenius_product(std::int64_t degree, bool has_large_exponent, std::int64_t s,
                          std::int64_t m) {
  return has_large_exponent && degree - s >= m;
}

std::int64_t num_vertices(const SimplicialComplex& complex) {
  return static_cast<std::int64_t>(complex.num_vertices());
}

}  // namespace

Integer MonomialBound::candidates(const SimplicialComplex& complex) const {
  Integer total = 0;
  for (VertexSet face : complex.faces()) total += binom(degree_cap, cardinality(face));
  return total;
}

std::vector<Integer> oracle_sr_colength_range(const SimplicialComplex& complex, std::int64_t s,
                                              std::int64_t n_max, OracleOptions options) {
  if (s < 1 || n_max < 0) throw Error(ErrorCode::InvalidQuery, "oracle needs s >= 1, n >= 0");
  // Past this degree some exponent is >= s and |a| - s >= n.
  const std::int64_t cap = std::max(num_vertices(complex) * (s - 1), n_max + s - 1);
  const auto c = census(complex, s, cap, options);
  std::vector<Integer> out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::int64_t count = 0;
    for (std::int64_t degree = 0; degree <= cap; ++degree) {
      for (int large = 0; large < 2; ++large) {
        if (!in_frobenius_product(degree, large == 1, s, n)) count += c.by_degree[degree][large];
      }
    }
    out.emplace_back(static_cast<long>(count));
  }
  return out;
}

Integer oracle_sr_colength(const SimplicialComplex& complex, std::int64_t s, std::int64_t n,
                           OracleOptions options) {
  if (n < 0) throw Error(ErrorCode::InvalidQuery, "oracle needs s >= 1, n >= 0");
  return oracle_sr_colength_range(complex, s, n, options).back();
}

std::vector<Integer> oracle_hilbert_samuel_range(const SimplicialComplex& complex,
                                                 std::int64_t n_max, OracleOptions options) {
  if (n_max < 0) throw Error(ErrorCode::InvalidQuery, "oracle needs n >= 0");
  std::vector<Integer> out{Integer(0)};
  if (n_max == 0) return out;
  const auto c = census(complex, 1, n_max - 1, options);
  std::int64_t count = 0;
  for (const auto& layer : c.by_degree) {
    count += layer[0] + layer[1];
    out.emplace_back(static_cast<long>(count));
  }
  return out;
}

Integer oracle_hilbert_samuel(const SimplicialComplex& complex, std::int64_t n,
                              OracleOptions options) {
  return oracle_hilbert_samuel_range(complex, n, options).back();
}

Integer oracle_conca(const SimplicialComplex& complex, std::int64_t s, OracleOptions options) {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "oracle needs s >= 1");
  const auto c = census(complex, s, num_vertices(complex) * (s - 1), options);
  std::int64_t count = 0;
  for (const auto& layer : c.by_degree) count += layer[0];
  return Integer(static_cast<long>(count));
}

std::vector<Integer> oracle_hk_rees_pieces(const SimplicialComplex& complex, std::int64_t s,
                                           std::int64_t extra, OracleOptions options) {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "oracle needs s >= 1");
  // Monomials outside the ideal in piece n either have all exponents < s
  // (degree <= r(s-1)) or, for n < s, degree < n + s <= 2s - 1.
  const std::int64_t cap = std::max(num_vertices(complex) * (s - 1), 2 * s - 2);
  const auto c = census(complex, s, cap, options);

  auto piece = [&](std::int64_t n) {
    const std::int64_t m = n < s ? n : n - s;
    std::int64_t count = 0;
    for (std::int64_t degree = std::min(n, cap + 1); degree <= cap; ++degree) {
      for (int large = 0; large < 2; ++large) {
        if (!in_frobenius_product(degree, large == 1, s, m)) count += c.by_degree[degree][large];
      }
    }
    return Integer(static_cast<long>(count));
  };

  std::vector<Integer> pieces;
  std::int64_t n = 0;
  while (true) {
    pieces.push_back(piece(n));
    if (n >= s && pieces.back() == 0) break;
    ++n;
  }
  for (std::int64_t k = 1; k <= extra; ++k) pieces.push_back(piece(n + k));
  return pieces;
}

Integer oracle_hk_rees(const SimplicialComplex& complex, std::int64_t s, OracleOptions options) {
  Integer total = 0;
  for (const auto& p : oracle_hk_rees_pieces(complex, s, 0, options)) total += p;
  return total;
}

}  // namespace facering
