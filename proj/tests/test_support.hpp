#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "facering/arith.hpp"
#include "facering/simplicial.hpp"

namespace facering::testing {

// Two disjoint edges: I = (x1,x2) ∩ (x3,x4).
inline SimplicialComplex two_disjoint_edges() {
  return SimplicialComplex::from_facets({"x1", "x2", "x3", "x4"}, {{"x1", "x2"}, {"x3", "x4"}});
}

// An edge glued to a filled triangle at x2.
inline SimplicialComplex edge_and_triangle() {
  return SimplicialComplex::from_facets({"x1", "x2", "x3", "x4"},
                                        {{"x1", "x2"}, {"x2", "x3", "x4"}});
}

// Triangle boundary on x2,x3,x4 with a pendant edge x1x2.
inline SimplicialComplex triangle_with_pendant() {
  return SimplicialComplex::from_facets(
      {"x1", "x2", "x3", "x4"}, {{"x1", "x2"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"}});
}

inline SimplicialComplex bipartite_3_4() { return independence_complex(complete_bipartite(3, 4)); }

// Random complex on r vertices: random facets, then any uncovered vertex becomes a facet.
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<int> facet_count(1, 4);
  std::uniform_int_distribution<VertexSet> mask(1, (VertexSet{1} << r) - 1);
  std::vector<VertexSet> facets;
  const int k = facet_count(rng);
  VertexSet covered = 0;
  for (int i = 0; i < k; ++i) {
    VertexSet f = mask(rng);
    // Keep facets small so oracle enumeration stays cheap.
    while (cardinality(f) > 3) f &= f - 1;
    facets.push_back(f);
    covered |= f;
  }
  for (std::size_t v = 0; v < r; ++v) {
    if (!(covered >> v & 1)) facets.push_back(VertexSet{1} << v);
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < r; ++v) labels.push_back("v" + std::to_string(v));
  return SimplicialComplex::from_index_facets(labels, facets);
}

// Naive enumerator: visits every exponent vector of total degree <= max_degree
// whose support is a face, and counts those accepted by `keep`.
inline std::int64_t naive_count(const SimplicialComplex& complex, std::int64_t max_degree,
                                const std::function<bool(const std::vector<std::int64_t>&)>& keep) {
  const std::size_t r = complex.num_vertices();
  std::vector<std::int64_t> a(r, 0);
  std::int64_t count = 0;
  std::function<void(std::size_t, std::int64_t, VertexSet)> walk = [&](std::size_t i,
                                                                      std::int64_t left,
                                                                      VertexSet support) {
    if (!complex.contains(support)) return;
    if (i == r) {
      if (keep(a)) ++count;
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      a[i] = e;
      walk(i + 1, left - e, e > 0 ? support | (VertexSet{1} << i) : support);
    }
    a[i] = 0;
  };
  walk(0, max_degree, 0);
  return count;
}

inline std::int64_t total(const std::vector<std::int64_t>& a) {
  std::int64_t t = 0;
  for (auto e : a) t += e;
  return t;
}

// x^a lies in m^[s] m^m iff it is divisible by x_i^s times a monomial of degree m.
inline bool in_frobenius_times_power(const std::vector<std::int64_t>& a, std::int64_t s,
                                     std::int64_t m) {
  for (auto e : a) {
    if (e >= s && total(a) - s >= m) return true;
  }
  return false;
}

inline std::int64_t naive_sr_colength(const SimplicialComplex& k, std::int64_t s, std::int64_t n) {
  const std::int64_t cap = static_cast<std::int64_t>(k.num_vertices()) * s + n;
  return naive_count(k, cap, [&](const auto& a) { return !in_frobenius_times_power(a, s, n); });
}

inline std::int64_t naive_param_colength(std::size_t d, std::int64_t s, std::int64_t n) {
  return naive_sr_colength(simplex(d), s, n);
}

// HK(s) from the generators x_i^s (t-degree 0) and x_i^s t^s of (𝔫,𝔫t)^[s]:
// x^a t^n with |a| >= n survives iff neither generator divides it.
inline std::int64_t naive_hk_rees(const SimplicialComplex& k, std::int64_t s) {
  std::int64_t sum = 0;
  std::int64_t zeros = 0;
  for (std::int64_t n = 0; zeros < 3; ++n) {
    const std::int64_t cap = n + static_cast<std::int64_t>(k.num_vertices()) * s;
    const std::int64_t piece = naive_count(k, cap, [&](const auto& a) {
      if (total(a) < n) return false;
      for (auto e : a) {
        if (e < s) continue;
        if (total(a) - s >= n) return false;                 // x_i^s · (𝔫^n t^n)
        if (n >= s && total(a) - s >= n - s) return false;   // x_i^s t^s · (𝔫^{n-s} t^{n-s})
      }
      return true;
    });
    sum += piece;
    zeros = (n >= s && piece == 0) ? zeros + 1 : 0;
  }
  return sum;
}

}  // namespace facering::testing
