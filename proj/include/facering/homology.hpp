#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "facering/arith.hpp"
#include "facering/simplicial.hpp"

namespace facering {

/// Dense integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Matrix of the simplicial boundary map from i-faces to (i-1)-faces.
/// Rows and columns follow the face order of SimplicialComplex::faces(); for
/// i = 0 the target is the one-dimensional space of the empty face
/// (augmentation).
struct BoundaryMatrix {
  int degree = 0;
  std::vector<VertexSet> row_faces;
  std::vector<VertexSet> col_faces;
  IntegerMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree);

struct SnfInvariants {
  std::vector<Integer> factors;  // positive, each divides the next
  std::size_t rank() const { return factors.size(); }
  /// Rank of the matrix reduced modulo `characteristic` (0 means over Q).
  std::size_t rank_mod(std::int64_t characteristic) const;
};

SnfInvariants smith_normal_form(IntegerMatrix matrix);

/// {G : G ∩ F = ∅, G ∪ F ∈ K}. Vertex labels are inherited; the link of a
/// facet is {∅}.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

/// dim_k of reduced simplicial homology H̃_i(K; k) with char k = characteristic.
std::int64_t reduced_betti(const SimplicialComplex& complex, int i,
                           std::int64_t characteristic);

/// All reduced Betti numbers in degrees -1..dim K.
std::vector<std::int64_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                                std::int64_t characteristic);

struct CohenMacaulayReport {
  bool cohen_macaulay = true;
  /// First face whose link violates Reisner's condition, and the degree.
  std::optional<VertexSet> witness_face;
  int witness_degree = 0;
  /// Primes occurring as torsion in the integral homology of some link.
  std::vector<std::int64_t> torsion_primes;
};

/// Reisner's criterion over a field of the given characteristic (0 or prime).
CohenMacaulayReport reisner_test(const SimplicialComplex& complex,
                                 std::int64_t characteristic);

bool is_cohen_macaulay(const SimplicialComplex& complex, std::int64_t characteristic);

/// Throws InvalidArgument unless characteristic is 0 or a prime below 2^31.
void validate_characteristic(std::int64_t characteristic);

}  // namespace facering
