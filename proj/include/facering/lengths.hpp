#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "facering/arith.hpp"
#include "facering/kernels/execution.hpp"
#include "facering/kernels/subset_profile.hpp"
#include "facering/polynomial.hpp"
#include "facering/simplicial.hpp"

namespace facering {

inline constexpr std::size_t kDefaultSubsetCap = 22;

/// ℓ(S / m^[s] m^n) for a polynomial ring S in d variables.
/// d = 0 gives 1; s >= 1 and n >= 0 are required.
Integer param_colength(std::int64_t d, std::int64_t s, std::int64_t n);

struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // h_0, ..., h_d
  int denominator_exponent = 0;         // d in (1 - t)^d
};

struct LengthOptions {
  std::size_t subset_cap = kDefaultSubsetCap;
  Execution execution = Execution::Parallel;
};

/// Closed-form lengths for one face ring R = k[Δ] = S / I_Δ.
///
/// The inclusion–exclusion over minimal primes is reduced once, at
/// construction, to a signed count of subfamilies per surviving-variable
/// count; sr_colength then costs at most r + 1 leaf evaluations.
class FaceRingLengths {
 public:
  explicit FaceRingLengths(const SimplicialComplex& complex, LengthOptions options = {});

  const SimplicialComplex& complex() const { return complex_; }
  const FHData& face_data() const { return data_; }
  int dimension() const { return data_.d; }
  /// Signed subfamily counts indexed by |∩ facets|.
  const kernels::SubsetProfile& profile() const { return profile_; }

  /// ℓ(S / (I_Δ + m^[s] m^n)).
  Integer sr_colength(std::int64_t s, std::int64_t n) const;
  /// ℓ(R / n^n); 0 at n = 0.
  Integer hilbert_samuel(std::int64_t n) const;
  /// ℓ(R / n^[s]) = sum_i f_{i-1} (s-1)^i.
  Integer conca_hk(std::int64_t s) const;
  HilbertSeries hilbert_series() const;
  /// deg h - d. Does not check Cohen–Macaulayness.
  std::int64_t postulation_number_unchecked() const;

 private:
  SimplicialComplex complex_;
  FHData data_;
  kernels::SubsetProfile profile_;
  std::vector<Integer> hs_coefficients_;  // (-1)^i h^{(i)}(1) / i!
};

Integer sr_colength(const SimplicialComplex& complex, std::int64_t s, std::int64_t n,
                    LengthOptions options = {});
Integer hilbert_samuel(const SimplicialComplex& complex, std::int64_t n);
Integer conca_hk(const SimplicialComplex& complex, std::int64_t s);

/// Numerator/denominator form; the numerator is checked against Stanley's
/// sum sum_i f_i t^{i+1} (1-t)^{d-i-1} brought over (1-t)^d.
HilbertSeries hilbert_series(const SimplicialComplex& complex);

/// n(𝔫) = deg h - d. Throws NotCohenMacaulay if Reisner's criterion fails in
/// the given characteristic.
std::int64_t postulation_number(const SimplicialComplex& complex,
                                std::int64_t characteristic = 0);

/// floor(n(𝔫) / s) + d for Cohen–Macaulay face rings.
std::int64_t reduction_number_marley(const SimplicialComplex& complex, std::int64_t s,
                                     std::int64_t characteristic = 0);

/// a_i values keyed by i; std::nullopt stands for -infinity.
using AInvariants = std::map<int, std::optional<std::int64_t>>;

/// spread if a_spread >= 0, spread - 1 otherwise.
std::int64_t reduction_number_hoa(const AInvariants& a_invariants, int spread);

}  // namespace facering
