#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "error_matchers.hpp"
#include "facering/hk_rees.hpp"
#include "facering/oracle.hpp"
#include "test_support.hpp"

namespace facering {
namespace {

TEST(OracleSrColength, Examples) {
  EXPECT_EQ(oracle_sr_colength(testing::two_disjoint_edges(), 2, 1), 11);
  EXPECT_EQ(oracle_sr_colength(simplex(2), 2, 1), 6);
  for (const auto& k : {rp2(), testing::bipartite_3_4(), simplex(4)}) {
    EXPECT_EQ(oracle_sr_colength(k, 1, 0), 1);
  }
}

TEST(OracleHilbertSamuelConca, Examples) {
  EXPECT_EQ(oracle_hilbert_samuel(testing::triangle_with_pendant(), 3), 13);
  EXPECT_EQ(oracle_conca(rp2(), 2), 32);
  for (const auto& k : {rp2(), testing::two_disjoint_edges()}) {
    EXPECT_EQ(oracle_hilbert_samuel(k, 1), 1);
    EXPECT_EQ(oracle_conca(k, 1), 1);
    EXPECT_EQ(oracle_hilbert_samuel(k, 0), 0);
  }
}

TEST(OracleHkRees, Examples) {
  EXPECT_EQ(oracle_hk_rees(testing::triangle_with_pendant(), 2), 25);
  EXPECT_EQ(oracle_hk_rees(testing::two_disjoint_edges(), 3), 69);
  for (const auto& k : {rp2(), testing::two_disjoint_edges(), simplex(3)}) {
    EXPECT_EQ(oracle_hk_rees(k, 1), 1);
  }
}

TEST(OracleHkRees, AgreesWithNaiveGeneratorCount) {
  for (const auto& k : {testing::two_disjoint_edges(), testing::triangle_with_pendant(),
                        testing::edge_and_triangle(), simplex(2)}) {
    for (std::int64_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(oracle_hk_rees(k, s), testing::naive_hk_rees(k, s)) << "s=" << s;
    }
  }
}

TEST(OracleHkRees, StoppingRuleIsSound) {
  for (const auto& k : {testing::two_disjoint_edges(), rp2(), testing::bipartite_3_4(),
                        testing::triangle_with_pendant()}) {
    for (std::int64_t s = 1; s <= 3; ++s) {
      const auto pieces = oracle_hk_rees_pieces(k, s, 2);
      ASSERT_GE(pieces.size(), 3u);
      const std::size_t first_zero = pieces.size() - 3;
      EXPECT_GE(static_cast<std::int64_t>(first_zero), s);
      EXPECT_EQ(pieces[first_zero], 0);
      EXPECT_EQ(pieces[first_zero + 1], 0);
      EXPECT_EQ(pieces[first_zero + 2], 0);
      for (std::size_t n = s; n < first_zero; ++n) EXPECT_GT(pieces[n], 0);
    }
  }
}

TEST(Oracle, BudgetExceeded) {
  OracleOptions tiny;
  tiny.budget = 10;
  EXPECT_ERROR(BudgetExceeded, oracle_sr_colength(rp2(), 3, 4, tiny));
  EXPECT_ERROR(BudgetExceeded, oracle_hk_rees(rp2(), 3, tiny));
}

TEST(Oracle, CandidateCount) {
  // Faces of two disjoint edges: 1 empty, 4 vertices, 2 edges.
  MonomialBound bound{5};
  EXPECT_EQ(bound.candidates(testing::two_disjoint_edges()), 1 + 4 * 5 + 2 * 10);
}

TEST(Oracle, RelabelingInvariance) {
  std::mt19937_64 rng(31);
  for (const auto& k : {rp2(), testing::edge_and_triangle(), path_complex(5)}) {
    std::vector<std::size_t> perm(k.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = k.permuted(perm);
    for (std::int64_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(oracle_sr_colength(p, s, 2), oracle_sr_colength(k, s, 2));
      EXPECT_EQ(oracle_conca(p, s), oracle_conca(k, s));
      EXPECT_EQ(oracle_hk_rees(p, s), oracle_hk_rees(k, s));
    }
    EXPECT_EQ(oracle_hilbert_samuel(p, 5), oracle_hilbert_samuel(k, 5));
  }
}

TEST(Oracle, SerialAndParallelAgree) {
  OracleOptions serial;
  serial.execution = Execution::Serial;
  for (const auto& k : {rp2(), testing::bipartite_3_4()}) {
    for (std::int64_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(oracle_sr_colength(k, s, 4, serial), oracle_sr_colength(k, s, 4));
      EXPECT_EQ(oracle_hk_rees(k, s, serial), oracle_hk_rees(k, s));
    }
  }
}

TEST(Oracle, ParamColengthEquivalence) {
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto k = simplex(d);
    for (std::int64_t s = 1; s <= 5; ++s) {
      const std::int64_t n_max = 3 * (static_cast<std::int64_t>(d) - 1) * s;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        EXPECT_EQ(param_colength(d, s, n), oracle_sr_colength(k, s, n))
            << "d=" << d << " s=" << s << " n=" << n;
      }
    }
  }
}

TEST(Oracle, RandomComplexesMatchClosedForms) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = testing::random_complex(rng, 2 + trial % 5);
    const FaceRingLengths l(k);
    const std::int64_t d = l.dimension();
    for (std::int64_t s = 1; s <= 3; ++s) {
      for (std::int64_t n = 0; n <= 3 * d * s; ++n) {
        EXPECT_EQ(l.sr_colength(s, n), oracle_sr_colength(k, s, n));
      }
      EXPECT_EQ(l.conca_hk(s), oracle_conca(k, s));
    }
    for (std::int64_t n = 0; n <= 9 * d; ++n) EXPECT_EQ(l.hilbert_samuel(n), oracle_hilbert_samuel(k, n));
  }
}

}  // namespace
}  // namespace facering
