#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace facering {

/// A set of vertex indices, bit i standing for vertex i.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int cardinality(VertexSet s) { return __builtin_popcountll(s); }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// A finite simplicial complex given by its facets.
///
/// Vertices carry external string labels mapped to dense indices at
/// construction; all internal arithmetic works on indices. Facets are kept
/// inclusion-maximal, deduplicated and sorted (by size, then bit pattern), and
/// every vertex lies in some facet.
///
/// The complex {∅} (only the empty face, dimension -1) is representable; it
/// arises as the link of a facet and cannot be built through from_facets.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(
      const std::vector<std::string>& vertex_labels,
      const std::vector<std::vector<std::string>>& facet_lists);

  static SimplicialComplex from_index_facets(
      std::vector<std::string> vertex_labels, std::vector<VertexSet> facets);

  /// The complex whose only face is the empty set.
  static SimplicialComplex empty_face_only();

  const std::vector<std::string>& vertices() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }

  /// Krull dimension d of the face ring (max facet size).
  int krull_dimension() const { return krull_dim_; }
  /// Geometric dimension d - 1.
  int dimension() const { return krull_dim_ - 1; }

  /// Number of facets discarded during construction as duplicates or
  /// non-maximal.
  std::size_t dropped_facets() const { return dropped_; }

  bool contains(VertexSet face) const;

  /// All faces including the empty one, ordered by size then bit pattern.
  std::vector<VertexSet> faces() const;
  std::vector<VertexSet> faces_of_dimension(int dim) const;

  VertexSet vertex_mask() const;

  /// Throws InvalidArgument on unknown labels.
  VertexSet face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexSet face) const;

  /// Renumbers vertices: new index of old vertex i is permutation[i].
  SimplicialComplex permuted(const std::vector<std::size_t>& permutation) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() = default;

  std::vector<std::string> labels_;
  std::vector<VertexSet> facets_;
  int krull_dim_ = 0;
  std::size_t dropped_ = 0;
};

struct FHData {
  std::vector<std::int64_t> f;  // f_{-1}, ..., f_{d-1}
  std::vector<std::int64_t> h;  // h_0, ..., h_d
  int d = 0;
  std::int64_t e = 0;       // multiplicity f_{d-1}
  std::int64_t h_at_1 = 0;  // h(1)
};

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}, with d = f.size() - 1.
std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f);

FHData face_data(const SimplicialComplex& complex);

/// Generators of the minimal primes P_F = (x_i : i not in F), one per facet in
/// facet order. The full simplex yields the single empty set (I = 0).
std::vector<VertexSet> minimal_primes(const SimplicialComplex& complex);

/// Finite simple graph.
class Graph {
 public:
  static Graph make(std::vector<std::string> vertex_labels,
                    std::vector<std::pair<std::size_t, std::size_t>> edges);

  const std::vector<std::string>& vertices() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  /// Neighbourhood bit sets, one per vertex.
  const std::vector<VertexSet>& adjacency() const { return adjacency_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexSet> adjacency_;
};

/// Complex of independent sets; its Stanley–Reisner ideal is the edge ideal.
SimplicialComplex independence_complex(const Graph& graph);

/// All inclusion-minimal vertex covers, sorted by size then bit pattern.
std::vector<VertexSet> minimal_vertex_covers(const Graph& graph);

// Canonical generators. Vertices are labelled x1..xr unless noted.
SimplicialComplex path_complex(std::size_t r);
SimplicialComplex cycle_complex(std::size_t r);
Graph cycle_graph(std::size_t r);
/// Labels x1..x_alpha, y1..y_beta.
Graph complete_bipartite(std::size_t alpha, std::size_t beta);
/// Six-vertex triangulation of the real projective plane on labels a..f.
SimplicialComplex rp2();
SimplicialComplex simplex(std::size_t r);

}  // namespace facering
