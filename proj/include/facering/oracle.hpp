#pragma once

#include <cstdint>
#include <vector>

#include "facering/arith.hpp"
#include "facering/kernels/execution.hpp"
#include "facering/simplicial.hpp"

namespace facering {

inline constexpr std::int64_t kDefaultOracleBudget = 100'000'000;

/// Enumeration bound for the brute-force counts: every face-supported
/// monomial of total degree <= degree_cap is visited.
struct MonomialBound {
  std::int64_t degree_cap = 0;
  /// Number of candidate monomials, sum over faces F of C(cap, |F|).
  Integer candidates(const SimplicialComplex& complex) const;
};

struct OracleOptions {
  std::int64_t budget = kDefaultOracleBudget;
  Execution execution = Execution::Parallel;
};

// Direct monomial counts in k[Δ]. A face-supported monomial x^a lies in
// 𝔫^[s] 𝔫^m iff some a_i >= s and |a| - s >= m, and in 𝔫^n iff |a| >= n.

/// ℓ(S / (I_Δ + m^[s] m^n)).
Integer oracle_sr_colength(const SimplicialComplex& complex, std::int64_t s, std::int64_t n,
                           OracleOptions options = {});
/// ℓ(R / 𝔫^n): face-supported monomials of degree < n.
Integer oracle_hilbert_samuel(const SimplicialComplex& complex, std::int64_t n,
                              OracleOptions options = {});
/// The same counts for n = 0..n_max from a single census.
std::vector<Integer> oracle_sr_colength_range(const SimplicialComplex& complex, std::int64_t s,
                                              std::int64_t n_max, OracleOptions options = {});
std::vector<Integer> oracle_hilbert_samuel_range(const SimplicialComplex& complex,
                                                 std::int64_t n_max, OracleOptions options = {});
/// ℓ(R / 𝔫^[s]): face-supported monomials with every exponent < s.
Integer oracle_conca(const SimplicialComplex& complex, std::int64_t s,
                     OracleOptions options = {});

/// Graded pieces ℓ([ℛ/(𝔫,𝔫t)^[s]]_n) for n = 0, 1, ...: 𝔫^n / 𝔫^[s]𝔫^n for
/// n < s and 𝔫^n / 𝔫^[s]𝔫^{n-s} for n >= s. Stops at the first zero piece
/// with n >= s, then appends `extra` further pieces.
std::vector<Integer> oracle_hk_rees_pieces(const SimplicialComplex& complex, std::int64_t s,
                                           std::int64_t extra = 0,
                                           OracleOptions options = {});

/// HK(s) as the sum of the graded pieces.
Integer oracle_hk_rees(const SimplicialComplex& complex, std::int64_t s,
                       OracleOptions options = {});

}  // namespace facering
