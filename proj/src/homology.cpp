#include "facering/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "facering/errors.hpp"

namespace facering {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree) {
  BoundaryMatrix bm;
  bm.degree = degree;
  bm.col_faces = complex.faces_of_dimension(degree);
  bm.row_faces = complex.faces_of_dimension(degree - 1);
  bm.matrix = IntegerMatrix(bm.row_faces.size(), bm.col_faces.size());
  if (degree < 0) return bm;
  std::map<VertexSet, std::size_t> row_index;
  for (std::size_t r = 0; r < bm.row_faces.size(); ++r) row_index[bm.row_faces[r]] = r;
  for (std::size_t c = 0; c < bm.col_faces.size(); ++c) {
    const VertexSet face = bm.col_faces[c];
    int position = 0;
    for (VertexSet rest = face; rest; rest &= rest - 1) {
      const VertexSet bit = rest & (~rest + 1);
      bm.matrix(row_index.at(face & ~bit), c) = (position % 2 == 0) ? 1 : -1;
      ++position;
    }
  }
  return bm;
}

std::size_t SnfInvariants::rank_mod(std::int64_t characteristic) const {
  if (characteristic == 0) return factors.size();
  const Integer p = static_cast<long>(characteristic);
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(),
                    [&](const Integer& d) { return mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) == 0; }));
}

SnfInvariants smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfInvariants out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: entry of least absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        if (pr == rows || abs(m(r, c)) < abs(m(pr, pc))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    if (pr != t) for (std::size_t c = 0; c < cols; ++c) std::swap(m(pr, c), m(t, c));
    if (pc != t) for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, pc), m(r, t));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) {
          clean = false;
          for (std::size_t c = t; c < cols; ++c) std::swap(m(r, c), m(t, c));
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) {
          clean = false;
          for (std::size_t r = t; r < rows; ++r) std::swap(m(r, c), m(r, t));
        }
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into the pivot row.
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t()) == 0) {
            for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
            clean = false;
            break;
          }
        }
      }
    }
    out.factors.push_back(abs(m(t, t)));
    ++t;
  }
  return out;
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  if (!complex.contains(face)) throw Error(ErrorCode::NotAFace, "face is not in the complex");
  std::vector<VertexSet> pieces;
  VertexSet covered = 0;
  for (VertexSet f : complex.facets()) {
    if (is_subset(face, f)) {
      pieces.push_back(f & ~face);
      covered |= f & ~face;
    }
  }
  if (covered == 0) return SimplicialComplex::empty_face_only();

  // Compress to the vertices actually used by the link.
  std::vector<std::string> labels;
  std::vector<int> new_index(complex.num_vertices(), -1);
  for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
    if (covered >> i & 1) {
      new_index[i] = static_cast<int>(labels.size());
      labels.push_back(complex.vertices()[i]);
    }
  }
  std::vector<VertexSet> facets;
  for (VertexSet p : pieces) {
    VertexSet g = 0;
    for (VertexSet rest = p; rest; rest &= rest - 1) {
      g |= VertexSet{1} << new_index[__builtin_ctzll(rest)];
    }
    facets.push_back(g);
  }
  return SimplicialComplex::from_index_facets(std::move(labels), std::move(facets));
}

namespace {

struct ChainData {
  std::vector<std::int64_t> dims;      // dims[i + 1] = dim C_i, i = -1..top
  std::vector<SnfInvariants> snf;      // snf[i] for boundary of degree i, i = 0..top
};

ChainData chain_data(const SimplicialComplex& complex) {
  ChainData data;
  const int top = complex.dimension();
  auto f = f_vector(complex);
  data.dims.assign(f.begin(), f.end());
  for (int i = 0; i <= top; ++i) {
    data.snf.push_back(smith_normal_form(boundary_matrix(complex, i).matrix));
  }
  return data;
}

std::int64_t betti_from(const ChainData& data, int i, std::int64_t characteristic) {
  const int top = static_cast<int>(data.dims.size()) - 2;
  if (i < -1 || i > top) return 0;
  std::int64_t value = data.dims[i + 1];
  if (i >= 0) value -= static_cast<std::int64_t>(data.snf[i].rank_mod(characteristic));
  if (i + 1 <= top) value -= static_cast<std::int64_t>(data.snf[i + 1].rank_mod(characteristic));
  return value;
}

void collect_primes(Integer n, std::set<std::int64_t>& primes) {
  for (long p = 2; Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.insert(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) primes.insert(n.get_si());
}

}  // namespace

void validate_characteristic(std::int64_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic < 2 || characteristic >= (std::int64_t{1} << 31)) {
    throw Error(ErrorCode::InvalidArgument, "characteristic must be 0 or a prime < 2^31");
  }
  Integer p = static_cast<long>(characteristic);
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "characteristic " + std::to_string(characteristic) + " is not prime");
  }
}

std::int64_t reduced_betti(const SimplicialComplex& complex, int i,
                           std::int64_t characteristic) {
  validate_characteristic(characteristic);
  return betti_from(chain_data(complex), i, characteristic);
}

std::vector<std::int64_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                                std::int64_t characteristic) {
  validate_characteristic(characteristic);
  const ChainData data = chain_data(complex);
  std::vector<std::int64_t> out;
  for (int i = -1; i <= complex.dimension(); ++i) out.push_back(betti_from(data, i, characteristic));
  return out;
}

CohenMacaulayReport reisner_test(const SimplicialComplex& complex,
                                 std::int64_t characteristic) {
  validate_characteristic(characteristic);
  CohenMacaulayReport report;
  std::set<std::int64_t> primes;
  for (VertexSet face : complex.faces()) {
    const SimplicialComplex lk = link(complex, face);
    const ChainData data = chain_data(lk);
    for (const auto& snf : data.snf) {
      for (const auto& factor : snf.factors) {
        if (factor > 1) collect_primes(factor, primes);
      }
    }
    if (!report.cohen_macaulay) continue;
    for (int i = -1; i < lk.dimension(); ++i) {
      if (betti_from(data, i, characteristic) != 0) {
        report.cohen_macaulay = false;
        report.witness_face = face;
        report.witness_degree = i;
        break;
      }
    }
  }
  report.torsion_primes.assign(primes.begin(), primes.end());
  return report;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, std::int64_t characteristic) {
  return reisner_test(complex, characteristic).cohen_macaulay;
}

}  // namespace facering
