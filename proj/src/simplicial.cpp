#include "facering/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "facering/arith.hpp"
#include "facering/errors.hpp"

namespace facering {
namespace {

bool facet_order(VertexSet a, VertexSet b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

// Enumerates every submask of `mask`, including 0 and `mask` itself.
template <typename Fn>
void for_each_submask(VertexSet mask, Fn&& fn) {
  VertexSet sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

std::vector<std::string> indexed_labels(const std::string& prefix,
                                        std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::string>& vertex_labels,
    const std::vector<std::vector<std::string>>& facet_lists) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    if (!index.emplace(vertex_labels[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel,
                  "duplicate vertex label '" + vertex_labels[i] + "'");
    }
  }
  if (vertex_labels.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "at most " + std::to_string(kMaxVertices) + " vertices supported");
  }
  std::vector<VertexSet> facets;
  facets.reserve(facet_lists.size());
  for (const auto& facet : facet_lists) {
    VertexSet mask = 0;
    for (const auto& label : facet) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw Error(ErrorCode::InvalidArgument,
                    "facet uses undeclared vertex '" + label + "'");
      }
      mask |= VertexSet{1} << it->second;
    }
    facets.push_back(mask);
  }
  return from_index_facets(vertex_labels, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_index_facets(
    std::vector<std::string> vertex_labels, std::vector<VertexSet> facets) {
  if (vertex_labels.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "at most " + std::to_string(kMaxVertices) + " vertices supported");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& label : vertex_labels) {
      if (!seen.insert(label).second) {
        throw Error(ErrorCode::DuplicateLabel,
                    "duplicate vertex label '" + label + "'");
      }
    }
  }
  const std::size_t input_count = facets.size();
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets.erase(std::remove(facets.begin(), facets.end(), VertexSet{0}), facets.end());
  if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "complex has no non-empty facet");

  const VertexSet universe =
      vertex_labels.size() == 64 ? ~VertexSet{0}
                                 : (VertexSet{1} << vertex_labels.size()) - 1;
  std::vector<VertexSet> maximal;
  for (VertexSet f : facets) {
    if (!is_subset(f, universe)) {
      throw Error(ErrorCode::InvalidArgument, "facet index out of range");
    }
    bool dominated = false;
    for (VertexSet g : facets) {
      if (g != f && is_subset(f, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), facet_order);

  VertexSet covered = 0;
  int max_size = 0;
  for (VertexSet f : maximal) {
    covered |= f;
    max_size = std::max(max_size, cardinality(f));
  }
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    if (!(covered >> i & 1)) {
      throw Error(ErrorCode::GhostVertex,
                  "vertex '" + vertex_labels[i] + "' lies in no facet");
    }
  }

  SimplicialComplex complex;
  complex.labels_ = std::move(vertex_labels);
  complex.facets_ = std::move(maximal);
  complex.krull_dim_ = max_size;
  complex.dropped_ = input_count - complex.facets_.size();
  return complex;
}

SimplicialComplex SimplicialComplex::empty_face_only() {
  SimplicialComplex complex;
  complex.facets_ = {VertexSet{0}};
  complex.krull_dim_ = 0;
  return complex;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](VertexSet f) { return is_subset(face, f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : facets_) {
    for_each_submask(f, [&](VertexSet sub) { seen.insert(sub); });
  }
  std::vector<VertexSet> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(), facet_order);
  return result;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int dim) const {
  std::vector<VertexSet> result;
  for (VertexSet face : faces()) {
    if (cardinality(face) == dim + 1) result.push_back(face);
  }
  return result;
}

VertexSet SimplicialComplex::vertex_mask() const {
  VertexSet mask = 0;
  for (VertexSet f : facets_) mask |= f;
  return mask;
}

VertexSet SimplicialComplex::face_from_labels(
    const std::vector<std::string>& labels) const {
  VertexSet mask = 0;
  for (const auto& label : labels) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown vertex '" + label + "'");
    }
    mask |= VertexSet{1} << (it - labels_.begin());
  }
  return mask;
}

std::vector<std::string> SimplicialComplex::labels_of(VertexSet face) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (face >> i & 1) out.push_back(labels_[i]);
  }
  return out;
}

SimplicialComplex SimplicialComplex::permuted(
    const std::vector<std::size_t>& permutation) const {
  if (permutation.size() != labels_.size()) {
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  }
  std::vector<std::string> labels(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) labels[permutation[i]] = labels_[i];
  std::vector<VertexSet> facets;
  for (VertexSet f : facets_) {
    VertexSet g = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (f >> i & 1) g |= VertexSet{1} << permutation[i];
    }
    facets.push_back(g);
  }
  return from_index_facets(std::move(labels), std::move(facets));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::int64_t> f(complex.krull_dimension() + 1, 0);
  for (VertexSet face : complex.faces()) ++f[cardinality(face)];
  return f;
}

std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f) {
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (std::int64_t j = 0; j <= d; ++j) {
    Integer acc = 0;
    for (std::int64_t i = 0; i <= j; ++i) {
      Integer term = binom(d - i, j - i) * static_cast<long>(f[i]);
      if ((j - i) % 2 == 0) acc += term; else acc -= term;
    }
    h[j] = acc.get_si();
  }
  return h;
}

FHData face_data(const SimplicialComplex& complex) {
  FHData data;
  data.f = f_vector(complex);
  data.h = h_vector(data.f);
  data.d = complex.krull_dimension();
  data.e = data.f.back();
  data.h_at_1 = 0;
  for (auto v : data.h) data.h_at_1 += v;
  return data;
}

std::vector<VertexSet> minimal_primes(const SimplicialComplex& complex) {
  const VertexSet all = complex.vertex_mask();
  std::vector<VertexSet> primes;
  primes.reserve(complex.num_facets());
  for (VertexSet f : complex.facets()) primes.push_back(all & ~f);
  return primes;
}

Graph Graph::make(std::vector<std::string> vertex_labels,
                  std::vector<std::pair<std::size_t, std::size_t>> edges) {
  if (vertex_labels.empty()) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  if (vertex_labels.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "at most " + std::to_string(kMaxVertices) + " vertices supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : vertex_labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate vertex label '" + label + "'");
    }
  }
  Graph g;
  g.adjacency_.assign(vertex_labels.size(), 0);
  for (auto [u, v] : edges) {
    if (u >= vertex_labels.size() || v >= vertex_labels.size()) {
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidGraph, "loops are not allowed");
    if (g.adjacency_[u] >> v & 1) {
      throw Error(ErrorCode::InvalidGraph, "multi-edges are not allowed");
    }
    g.adjacency_[u] |= VertexSet{1} << v;
    g.adjacency_[v] |= VertexSet{1} << u;
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  g.labels_ = std::move(vertex_labels);
  return g;
}

namespace {

// Bron–Kerbosch with pivoting on the complement graph: cliques there are the
// independent sets here.
void maximal_independent_sets(const std::vector<VertexSet>& non_adjacent,
                              VertexSet chosen, VertexSet candidates,
                              VertexSet excluded, std::vector<VertexSet>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(chosen);
    return;
  }
  const VertexSet pool = candidates | excluded;
  int pivot = __builtin_ctzll(pool);
  int best = -1;
  for (VertexSet rest = pool; rest; rest &= rest - 1) {
    const int u = __builtin_ctzll(rest);
    const int score = cardinality(candidates & non_adjacent[u]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (VertexSet rest = candidates & ~non_adjacent[pivot]; rest; rest &= rest - 1) {
    const int v = __builtin_ctzll(rest);
    const VertexSet bit = VertexSet{1} << v;
    maximal_independent_sets(non_adjacent, chosen | bit,
                             candidates & non_adjacent[v], excluded & non_adjacent[v],
                             out);
    candidates &= ~bit;
    excluded |= bit;
  }
}

void covers_from(const Graph& graph, VertexSet cover, std::size_t edge_index,
                 std::vector<VertexSet>& out) {
  const auto& edges = graph.edges();
  while (edge_index < edges.size()) {
    auto [u, v] = edges[edge_index];
    if ((cover >> u & 1) || (cover >> v & 1)) {
      ++edge_index;
      continue;
    }
    covers_from(graph, cover | VertexSet{1} << u, edge_index + 1, out);
    covers_from(graph, cover | VertexSet{1} << v, edge_index + 1, out);
    return;
  }
  out.push_back(cover);
}

}  // namespace

SimplicialComplex independence_complex(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> non_adjacent(n);
  for (std::size_t v = 0; v < n; ++v) {
    non_adjacent[v] = all & ~graph.adjacency()[v] & ~(VertexSet{1} << v);
  }
  std::vector<VertexSet> facets;
  maximal_independent_sets(non_adjacent, 0, all, 0, facets);
  return SimplicialComplex::from_index_facets(graph.vertices(), std::move(facets));
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& graph) {
  std::vector<VertexSet> covers;
  covers_from(graph, 0, 0, covers);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<VertexSet> minimal;
  for (VertexSet c : covers) {
    bool has_smaller = std::any_of(covers.begin(), covers.end(), [c](VertexSet other) {
      return other != c && is_subset(other, c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), facet_order);
  return minimal;
}

SimplicialComplex path_complex(std::size_t r) {
  if (r < 2 || r > kMaxVertices) {
    throw Error(ErrorCode::SizeOutOfRange, "path_complex needs 2 <= r <= 64");
  }
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i + 1 < r; ++i) facets.push_back(VertexSet{3} << i);
  return SimplicialComplex::from_index_facets(indexed_labels("x", r), std::move(facets));
}

SimplicialComplex cycle_complex(std::size_t r) {
  if (r < 3 || r > kMaxVertices) {
    throw Error(ErrorCode::SizeOutOfRange, "cycle_complex needs 3 <= r <= 64");
  }
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i < r; ++i) {
    facets.push_back(VertexSet{1} << i | VertexSet{1} << ((i + 1) % r));
  }
  return SimplicialComplex::from_index_facets(indexed_labels("x", r), std::move(facets));
}

Graph cycle_graph(std::size_t r) {
  if (r < 3 || r > kMaxVertices) {
    throw Error(ErrorCode::SizeOutOfRange, "cycle_graph needs 3 <= r <= 64");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);
  return Graph::make(indexed_labels("x", r), std::move(edges));
}

Graph complete_bipartite(std::size_t alpha, std::size_t beta) {
  if (alpha < 1 || alpha > beta || alpha + beta > kMaxVertices) {
    throw Error(ErrorCode::SizeOutOfRange,
                "complete_bipartite needs 1 <= alpha <= beta, alpha + beta <= 64");
  }
  auto labels = indexed_labels("x", alpha);
  for (auto& y : indexed_labels("y", beta)) labels.push_back(std::move(y));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < alpha; ++i) {
    for (std::size_t j = 0; j < beta; ++j) edges.emplace_back(i, alpha + j);
  }
  return Graph::make(std::move(labels), std::move(edges));
}

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b", "e"}, {"a", "d", "e"}, {"a", "c", "d"}, {"b", "c", "d"},
       {"b", "d", "f"}, {"a", "b", "f"}, {"a", "c", "f"}, {"c", "e", "f"},
       {"b", "c", "e"}, {"d", "e", "f"}});
}

SimplicialComplex simplex(std::size_t r) {
  if (r < 1 || r > kMaxVertices) {
    throw Error(ErrorCode::SizeOutOfRange, "simplex needs 1 <= r <= 64");
  }
  const VertexSet all = r == 64 ? ~VertexSet{0} : (VertexSet{1} << r) - 1;
  return SimplicialComplex::from_index_facets(indexed_labels("x", r), {all});
}

}  // namespace facering
