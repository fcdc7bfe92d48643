#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "facering/simplicial.hpp"

namespace facering {

enum class ComplexFormat { FacetText, Structured };

/// A complex as read from or written to disk.
struct ComplexDocument {
  ComplexFormat format = ComplexFormat::FacetText;
  std::optional<std::string> name;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
};

struct ParsedComplex {
  SimplicialComplex complex;
  ComplexDocument document;
  std::vector<std::string> warnings;
};

/// Facet text: one facet per line, labels separated by whitespace, '#' starts
/// a comment. Leading "# name: X" and "# vertices: a b c" comments set the
/// document name and the vertex order.
/// Structured: a JSON object {"name"?, "vertices": [...], "facets": [[...]]}.
/// The format is detected from the first non-blank character.
ParsedComplex parse_complex_text(const std::string& text);
ParsedComplex parse_complex(const std::filesystem::path& path);

ComplexDocument to_document(const SimplicialComplex& complex, ComplexFormat format,
                            std::optional<std::string> name = std::nullopt);

std::string write_complex_text(const ComplexDocument& document);
void write_complex(const ComplexDocument& document, const std::filesystem::path& path);

/// Structured for ".json" paths, facet text otherwise.
ComplexFormat format_for_path(const std::filesystem::path& path);

}  // namespace facering
