#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "error_matchers.hpp"
#include "facering/complex_io.hpp"
#include "test_support.hpp"

namespace facering {
namespace {

std::set<std::set<std::string>> labelled_facets(const SimplicialComplex& k) {
  std::set<std::set<std::string>> out;
  for (auto f : k.facets()) {
    const auto labels = k.labels_of(f);
    out.emplace(labels.begin(), labels.end());
  }
  return out;
}

TEST(ParseFacetText, ProjectivePlane) {
  const std::string text =
      "a b e\na d e\na c d\nb c d\nb d f\na b f\na c f\nc e f\nb c e\nd e f\n";
  const auto parsed = parse_complex_text(text);
  EXPECT_EQ(labelled_facets(parsed.complex), labelled_facets(rp2()));
  EXPECT_EQ(parsed.document.format, ComplexFormat::FacetText);
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(ParseStructured, TwoPoints) {
  const auto parsed =
      parse_complex_text(R"({"vertices":["x1","x2"],"facets":[["x1"],["x2"]]})");
  EXPECT_EQ(parsed.complex.num_facets(), 2u);
  EXPECT_EQ(parsed.complex.dimension(), 0);
  EXPECT_EQ(parsed.document.format, ComplexFormat::Structured);
}

TEST(ParseFacetText, DroppedFacetWarns) {
  const auto parsed = parse_complex_text("x1 x2\nx1\n");
  EXPECT_EQ(parsed.complex.num_facets(), 1u);
  EXPECT_EQ(parsed.warnings.size(), 1u);
}

TEST(ParseFacetText, CommentsAndHeaders) {
  const auto parsed = parse_complex_text(
      "# name: pendant\n# vertices: x4 x3 x2 x1\n\nx1 x2  # the pendant edge\nx2 x3\nx2 x4\nx3 x4\n");
  EXPECT_EQ(parsed.document.name, "pendant");
  EXPECT_EQ(parsed.complex.vertices(), (std::vector<std::string>{"x4", "x3", "x2", "x1"}));
  EXPECT_EQ(parsed.complex.num_facets(), 4u);
}

TEST(ParseFacetText, PositionedErrors) {
  try {
    parse_complex_text("a b\nc $d\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  try {
    parse_complex_text("a b a\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(ParseStructured, Errors) {
  EXPECT_ERROR(ParseError, parse_complex_text("{\"vertices\": [\"a\"], "));
  EXPECT_ERROR(ParseError, parse_complex_text(R"({"vertices":["a"]})"));
  EXPECT_ERROR(ParseError, parse_complex_text(R"({"vertices":["a"],"facets":[[1]]})"));
  EXPECT_ERROR(ValidationError, parse_complex_text(R"({"vertices":["a","b"],"facets":[["a"]]})"));
  EXPECT_ERROR(ValidationError, parse_complex_text(R"({"vertices":["a"],"facets":[["b"]]})"));
  EXPECT_ERROR(ValidationError, parse_complex_text("# only a comment\n"));
}

TEST(RoundTrip, BothFormats) {
  const auto dir = std::filesystem::temp_directory_path() / "facering_io_test";
  std::filesystem::create_directories(dir);
  for (const auto& k : {rp2(), testing::bipartite_3_4(), testing::triangle_with_pendant(),
                        SimplicialComplex::from_facets({"p"}, {{"p"}})}) {
    for (const char* name : {"k.sc", "k.json"}) {
      const auto path = dir / name;
      write_complex(to_document(k, format_for_path(path), "sample"), path);
      const auto back = parse_complex(path);
      EXPECT_EQ(back.complex, k);
      EXPECT_EQ(back.document.name, "sample");
    }
  }
  std::filesystem::remove_all(dir);
}

TEST(RoundTrip, MissingFile) {
  EXPECT_ERROR(ValidationError, parse_complex("/nonexistent/complex.sc"));
}

}  // namespace
}  // namespace facering
