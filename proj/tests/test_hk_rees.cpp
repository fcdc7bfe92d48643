#include <gtest/gtest.h>

#include "error_matchers.hpp"
#include "facering/hk_rees.hpp"
#include "facering/oracle.hpp"
#include "test_support.hpp"

namespace facering {
namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

HKMode non_cm(std::int64_t delta, ADSign sign = ADSign::Negative) {
  return NonCohenMacaulayMode{delta, sign};
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(q(x));
  return out;
}

TEST(DetermineMode, Examples) {
  const auto pendant = determine_mode(testing::triangle_with_pendant(), 0);
  ASSERT_TRUE(pendant.is_cohen_macaulay());
  EXPECT_EQ(std::get<CohenMacaulayMode>(pendant.variant()).postulation, 0);
  EXPECT_EQ(pendant.validity_threshold(), 1);

  const auto edges = determine_mode(testing::two_disjoint_edges(), 0, {2, ADSign::Negative});
  EXPECT_FALSE(edges.is_cohen_macaulay());
  EXPECT_EQ(edges.validity_threshold(), 3);

  const auto bip = determine_mode(testing::bipartite_3_4(), 0, {4, ADSign::Negative});
  EXPECT_EQ(bip.validity_threshold(), 5);

  EXPECT_ERROR(MissingAInvariantData, determine_mode(testing::two_disjoint_edges(), 0));
  EXPECT_ERROR(MissingAInvariantData, determine_mode(rp2(), 2));
  EXPECT_ERROR(InvalidArgument, determine_mode(rp2(), 0, {-1, ADSign::Zero}));
}

TEST(HKMode, JParameter) {
  const HKMode plane = CohenMacaulayMode{-1};
  EXPECT_EQ(plane.j(1), 1);
  EXPECT_EQ(plane.j(7), 1);
  const HKMode deep = CohenMacaulayMode{-3};
  EXPECT_EQ(deep.j(1), 3);
  EXPECT_EQ(deep.j(2), 2);
  EXPECT_EQ(deep.j(3), 1);
  EXPECT_EQ(deep.validity_threshold(), 3);
  EXPECT_EQ(HKMode(CohenMacaulayMode{0}).j(4), 0);
  EXPECT_EQ(non_cm(2).j(9), 1);
  EXPECT_EQ(non_cm(2, ADSign::Zero).j(9), 0);
}

TEST(HkReesAt, ProjectivePlane) {
  const HilbertKunzRees hk(rp2(), determine_mode(rp2(), 0));
  const std::vector<long> expected = {104, 759, 2806, 7475, 16386};
  for (std::int64_t s = 2; s <= 6; ++s) EXPECT_EQ(hk.value_at(s), expected[s - 2]);
}

TEST(HkReesAt, ProjectivePlaneCharacteristicTwoAgrees) {
  // In characteristic 2, H^3 and H^2 are nonzero in degree 0 (a_2 = a_3 = 0);
  // non-CM mode with either sign reproduces the CM values.
  const HilbertKunzRees cm(rp2(), determine_mode(rp2(), 0));
  const HilbertKunzRees zero(rp2(), non_cm(0, ADSign::Zero));
  const HilbertKunzRees negative(rp2(), non_cm(2));
  for (std::int64_t s = 1; s <= 8; ++s) EXPECT_EQ(zero.value_at(s), cm.value_at(s));
  for (std::int64_t s = 3; s <= 8; ++s) EXPECT_EQ(negative.value_at(s), cm.value_at(s));
}

TEST(HkReesAt, PointExamples) {
  const HilbertKunzRees edges(testing::two_disjoint_edges(), non_cm(2));
  EXPECT_EQ(edges.value_at(3), 69);
  EXPECT_EQ(q(8 * 27 - 2 * 3 - 3, 3), q(69));
  const HilbertKunzRees pendant(testing::triangle_with_pendant(),
                                determine_mode(testing::triangle_with_pendant(), 0));
  EXPECT_EQ(pendant.value_at(1), 1);
  EXPECT_EQ(pendant.value_at(2), 25);
  const HilbertKunzRees bip(testing::bipartite_3_4(), non_cm(4));
  EXPECT_EQ(bip.value_at(5), 6828);
}

TEST(HkReesAt, ThresholdEnforced) {
  const HilbertKunzRees edges(testing::two_disjoint_edges(), non_cm(2));
  EXPECT_ERROR(BelowValidityThreshold, edges.value_at(2));
  EXPECT_ERROR(InvalidQuery, edges.value_at(0));
  HKOptions experimental;
  experimental.experimental = true;
  const HilbertKunzRees loose(testing::two_disjoint_edges(), non_cm(2), experimental);
  EXPECT_NO_THROW(loose.value_at(2));
}

TEST(HkReesAt, EmptyMiddleSum) {
  // d = 2, j = 1: the sum over s <= n <= (d - j)s - 1 is empty.
  const HilbertKunzRees edges(testing::two_disjoint_edges(), non_cm(2));
  for (std::int64_t s = 3; s <= 9; ++s) {
    EXPECT_EQ(edges.value_at(s), Integer((8 * s * s * s - 2 * s - 3) / 3));
  }
}

TEST(HkReesAt, CohenMacaulayValueAtOne) {
  for (const auto& k : {rp2(), testing::triangle_with_pendant(), path_complex(5), simplex(3),
                        cycle_complex(5)}) {
    HKOptions options;
    options.experimental = true;
    EXPECT_EQ(hk_rees_at(k, 1, determine_mode(k, 0), options), 1);
  }
}

TEST(HkReesAt, ModeIndependence) {
  // CM complexes whose a-invariants are known: a_d = n(𝔫) < 0 and delta = |n(𝔫)|.
  for (const auto& k : {rp2(), path_complex(4), path_complex(7)}) {
    const HilbertKunzRees cm(k, determine_mode(k, 0));
    const std::int64_t delta = -postulation_number(k);
    const HilbertKunzRees forced(k, non_cm(delta));
    for (std::int64_t s = delta + 1; s <= delta + 6; ++s) EXPECT_EQ(forced.value_at(s), cm.value_at(s));
  }
  const auto pendant = testing::triangle_with_pendant();
  const HilbertKunzRees cm(pendant, determine_mode(pendant, 0));
  const HilbertKunzRees forced(pendant, non_cm(0, ADSign::Zero));
  for (std::int64_t s = 1; s <= 6; ++s) EXPECT_EQ(forced.value_at(s), cm.value_at(s));
}

TEST(HkReesAt, ExperimentalCohenMacaulayValuesMatchOracle) {
  // Postulation number -2 (full 2-simplex) and -2 (two triangles sharing an edge).
  const auto book = SimplicialComplex::from_facets({"a", "b", "c", "d"},
                                                   {{"a", "b", "c"}, {"a", "b", "d"}});
  ASSERT_EQ(postulation_number(book), -2);
  HKOptions options;
  options.experimental = true;
  for (const auto& k : {book, simplex(2), simplex(3)}) {
    const auto mode = determine_mode(k, 0);
    for (std::int64_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(hk_rees_at(k, s, mode, options), oracle_hk_rees(k, s))
          << "s=" << s << " on " << k.num_vertices() << " vertices";
    }
  }
}

TEST(HkReesPolynomial, TwoDisjointEdges) {
  const auto report = hk_rees_polynomial(testing::two_disjoint_edges(), non_cm(2));
  EXPECT_EQ(report.polynomial.coefficients(),
            (std::vector<Rational>{q(-1), q(-2, 3), q(0), q(8, 3)}));
  EXPECT_EQ(report.binomial.coefficients, ints({-1, 2, -16, 16}));
  EXPECT_EQ(report.s_min, 3);
  EXPECT_EQ(report.samples.size(), 4u);
  EXPECT_EQ(report.verification.size(), 2u);
}

TEST(HkReesPolynomial, EdgeAndTriangle) {
  const auto report = hk_rees_polynomial(testing::edge_and_triangle(), non_cm(3));
  EXPECT_EQ(report.polynomial.coefficients(),
            (std::vector<Rational>{q(0), q(-7, 12), q(-9, 8), q(13, 12), q(13, 8)}));
  EXPECT_EQ(report.binomial.coefficients, ints({0, 0, 14, -52, 39}));
  EXPECT_EQ(report.multiplicity, q(13, 8));
}

TEST(HkReesPolynomial, TriangleWithPendant) {
  const auto k = testing::triangle_with_pendant();
  const auto report = hk_rees_polynomial(k, determine_mode(k, 0));
  EXPECT_EQ(report.polynomial.coefficients(),
            (std::vector<Rational>{q(1), q(-4, 3), q(-4), q(16, 3)}));
  EXPECT_EQ(report.binomial.coefficients, ints({1, 8, -40, 32}));
  EXPECT_EQ(report.s_min, 1);
}

TEST(HkReesPolynomial, PathFamily) {
  for (long r = 3; r <= 10; ++r) {
    const auto k = path_complex(r);
    const auto report = hk_rees_polynomial(k, determine_mode(k, 0));
    EXPECT_EQ(report.binomial.coefficients, ints({0, 2 * r - 3, -2 * (5 * r - 6), 8 * (r - 1)}))
        << "r=" << r;
  }
}

TEST(HkReesPolynomial, ProjectivePlane) {
  const auto report = hk_rees_polynomial(rp2(), determine_mode(rp2(), 0));
  EXPECT_EQ(report.binomial.coefficients, ints({0, -41, 372, -720, 390}));
  EXPECT_EQ(report.polynomial.degree(), 4);
}

TEST(HkReesPolynomial, CompleteBipartite) {
  const auto report = hk_rees_polynomial(testing::bipartite_3_4(), non_cm(4));
  EXPECT_EQ(report.polynomial.coefficients(),
            (std::vector<Rational>{q(-1), q(-9, 20), q(-7, 24), q(-1, 12), q(19, 24), q(61, 30)}));
}

TEST(HkReesPolynomial, ReproducesSamplesAndDegree) {
  for (const auto& [k, mode] : std::vector<std::pair<SimplicialComplex, HKMode>>{
           {rp2(), CohenMacaulayMode{-1}},
           {testing::bipartite_3_4(), non_cm(4)},
           {cycle_complex(6), CohenMacaulayMode{-1}},
           {simplex(3), CohenMacaulayMode{-3}}}) {
    const auto report = hk_rees_polynomial(k, mode);
    EXPECT_EQ(report.polynomial.degree(), report.d + 1);
    for (const auto& [s, v] : report.samples) EXPECT_EQ(report.polynomial.evaluate(Rational(s)), Rational(v));
    for (const auto& [s, v] : report.verification) EXPECT_EQ(report.polynomial.evaluate(Rational(s)), Rational(v));
  }
}

TEST(HkReesAt, SmallerJGivesSameValues) {
  // With j = 0 the extra summands cancel because 𝔫^[s]𝔫^n = 𝔫^{n+s} there.
  const HilbertKunzRees edges(testing::two_disjoint_edges(), non_cm(2));
  const HilbertKunzRees zero(testing::two_disjoint_edges(), non_cm(2, ADSign::Zero));
  for (std::int64_t s = 3; s <= 8; ++s) EXPECT_EQ(zero.value_at(s), edges.value_at(s));
}

TEST(HkReesPolynomial, OracleCrossCheck) {
  HKOptions options;
  options.oracle_s_max = 4;
  const auto report = hk_rees_polynomial(testing::two_disjoint_edges(), non_cm(2), options);
  EXPECT_TRUE(report.oracle.checked);
  EXPECT_TRUE(report.oracle.agree);
  EXPECT_EQ(report.oracle.s_checked, (std::vector<std::int64_t>{3, 4}));
}

TEST(EtoYoshida, Constant) {
  EXPECT_EQ(eto_yoshida_constant(2), q(4, 3));
  EXPECT_EQ(eto_yoshida_constant(3), q(13, 8));
  EXPECT_EQ(eto_yoshida_constant(4), q(61, 30));
}

TEST(EtoYoshida, EqualityOnExamples) {
  const std::vector<std::pair<SimplicialComplex, HKMode>> cases = {
      {testing::two_disjoint_edges(), non_cm(2)},
      {testing::edge_and_triangle(), non_cm(3)},
      {testing::triangle_with_pendant(), CohenMacaulayMode{0}},
      {path_complex(5), CohenMacaulayMode{-1}},
      {testing::bipartite_3_4(), non_cm(4)},
      {rp2(), CohenMacaulayMode{-1}}};
  for (const auto& [k, mode] : cases) {
    const auto report = hk_rees_polynomial(k, mode);
    const auto verdict = eto_yoshida_check(report);
    EXPECT_TRUE(verdict.equal);
    EXPECT_TRUE(verdict.within_bound);
    EXPECT_EQ(verdict.leading, eto_yoshida_constant(report.d) * face_data(k).e);
  }
  const auto plane = eto_yoshida_check(hk_rees_polynomial(rp2(), CohenMacaulayMode{-1}));
  EXPECT_EQ(plane.leading, q(65, 4));
}

}  // namespace
}  // namespace facering
