#include "facering/lengths.hpp"

#include <algorithm>

#include "facering/errors.hpp"
#include "facering/homology.hpp"

namespace facering {

Integer param_colength(std::int64_t d, std::int64_t s, std::int64_t n) {
  if (s < 1 || n < 0 || d < 0) {
    throw Error(ErrorCode::InvalidQuery,
                "param_colength needs d >= 0, s >= 1, n >= 0 (got d=" + std::to_string(d) +
                    ", s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
  }
  if (d == 0) return 1;
  if (d == 1) return Integer(static_cast<long>(s + n));
  if (d == 2) {
    if (n <= s) return Integer(static_cast<long>(s * s + n * n + n));
    return binom(n + s + 1, 2);
  }
  if (n <= s) return ipow(s, d) + binom(n + d - 1, d) * static_cast<long>(d);
  if (n <= (d - 1) * s - 1) {
    Integer acc = ipow(s, d);
    for (std::int64_t i = 1; i <= d - 1; ++i) {
      Integer term = binom(d, i) * binom(n - (i - 1) * s + d - 1, d);
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    return acc;
  }
  return binom(n + s + d - 1, d);
}

FaceRingLengths::FaceRingLengths(const SimplicialComplex& complex, LengthOptions options)
    : complex_(complex), data_(facering::face_data(complex)) {
  const auto primes = minimal_primes(complex_);
  if (primes.size() == 1) {
    // I_Δ = 0 or a single prime: S / P is a polynomial ring on the facet.
    profile_.assign(complex_.num_vertices() + 1, 0);
    profile_[cardinality(complex_.facets().front())] = 1;
  } else {
    if (primes.size() > options.subset_cap) {
      throw Error(ErrorCode::SubsetBlowup,
                  std::to_string(primes.size()) + " minimal primes exceed the enumeration cap of " +
                      std::to_string(options.subset_cap));
    }
    // S / (P_i1 + ... + P_ik) keeps exactly the variables of F_i1 ∩ ... ∩ F_ik.
    profile_ = options.execution == Execution::Serial
                   ? kernels::subset_profile_serial(complex_.facets(), complex_.num_vertices())
                   : kernels::subset_profile_parallel(complex_.facets(), complex_.num_vertices());
  }

  std::vector<Rational> h;
  for (auto v : data_.h) h.emplace_back(static_cast<long>(v));
  const RationalPolynomial hpoly(h);
  for (int i = 0; i <= data_.d; ++i) {
    Rational c = hpoly.derivative_at_one(static_cast<std::size_t>(i)) / Rational(factorial(i));
    if (i % 2 == 1) c = -c;
    hs_coefficients_.push_back(c.get_num());  // h^{(i)}(1)/i! is an integer
  }
}

Integer FaceRingLengths::sr_colength(std::int64_t s, std::int64_t n) const {
  if (s < 1 || n < 0) {
    throw Error(ErrorCode::InvalidQuery, "sr_colength needs s >= 1 and n >= 0");
  }
  Integer total = 0;
  for (std::size_t k = 0; k < profile_.size(); ++k) {
    if (profile_[k] == 0) continue;
    total += param_colength(static_cast<std::int64_t>(k), s, n) * static_cast<long>(profile_[k]);
  }
  return total;
}

Integer FaceRingLengths::hilbert_samuel(std::int64_t n) const {
  if (n < 0) throw Error(ErrorCode::InvalidQuery, "hilbert_samuel needs n >= 0");
  if (n == 0) return 0;
  const std::int64_t d = data_.d;
  Integer total = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    total += hs_coefficients_[i] * binom(n - 1 + d - i, d - i);
  }
  return total;
}

Integer FaceRingLengths::conca_hk(std::int64_t s) const {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "conca_hk needs s >= 1");
  Integer total = 0;
  for (std::size_t i = 0; i < data_.f.size(); ++i) {
    total += ipow(s - 1, static_cast<std::int64_t>(i)) * static_cast<long>(data_.f[i]);
  }
  return total;
}

HilbertSeries FaceRingLengths::hilbert_series() const {
  const int d = data_.d;
  // Stanley: sum_{i=-1}^{d-1} f_i t^{i+1} (1-t)^{d-i-1}.
  std::vector<Integer> numerator(d + 1, 0);
  for (int i = -1; i <= d - 1; ++i) {
    const int e = d - i - 1;
    for (int k = 0; k <= e; ++k) {
      Integer term = binom(e, k) * static_cast<long>(data_.f[i + 1]);
      if (k % 2 == 1) term = -term;
      numerator[i + 1 + k] += term;
    }
  }
  for (int j = 0; j <= d; ++j) {
    if (numerator[j] != static_cast<long>(data_.h[j])) {
      throw Error(ErrorCode::ValidationError, "h-vector disagrees with Stanley's Hilbert series");
    }
  }
  return HilbertSeries{data_.h, d};
}

std::int64_t FaceRingLengths::postulation_number_unchecked() const {
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < data_.h.size(); ++i) {
    if (data_.h[i] != 0) degree = static_cast<std::int64_t>(i);
  }
  return degree - data_.d;
}

Integer sr_colength(const SimplicialComplex& complex, std::int64_t s, std::int64_t n,
                    LengthOptions options) {
  return FaceRingLengths(complex, options).sr_colength(s, n);
}

Integer hilbert_samuel(const SimplicialComplex& complex, std::int64_t n) {
  return FaceRingLengths(complex).hilbert_samuel(n);
}

Integer conca_hk(const SimplicialComplex& complex, std::int64_t s) {
  return FaceRingLengths(complex).conca_hk(s);
}

HilbertSeries hilbert_series(const SimplicialComplex& complex) {
  return FaceRingLengths(complex).hilbert_series();
}

std::int64_t postulation_number(const SimplicialComplex& complex, std::int64_t characteristic) {
  if (!is_cohen_macaulay(complex, characteristic)) {
    throw Error(ErrorCode::NotCohenMacaulay,
                "face ring is not Cohen-Macaulay in characteristic " +
                    std::to_string(characteristic));
  }
  return FaceRingLengths(complex).postulation_number_unchecked();
}

std::int64_t reduction_number_marley(const SimplicialComplex& complex, std::int64_t s,
                                     std::int64_t characteristic) {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "reduction number needs s >= 1");
  const std::int64_t n = postulation_number(complex, characteristic);
  return floor_div(n, s) + complex.krull_dimension();
}

std::int64_t reduction_number_hoa(const AInvariants& a_invariants, int spread) {
  auto it = a_invariants.find(spread);
  if (it == a_invariants.end() || !it->second.has_value()) {
    throw Error(ErrorCode::MissingAInvariant,
                "a_" + std::to_string(spread) + " must be supplied and finite");
  }
  return *it->second >= 0 ? spread : spread - 1;
}

}  // namespace facering
