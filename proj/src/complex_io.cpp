#include "facering/complex_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "facering/errors.hpp"

namespace facering {
namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
         c == ':' || c == '\'';
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ComplexDocument parse_facet_text(const std::string& text) {
  ComplexDocument doc;
  doc.format = ComplexFormat::FacetText;
  std::unordered_set<std::string> known;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string body = line;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      body = line.substr(0, hash);
      std::string comment = line.substr(hash + 1);
      auto header = [&](const std::string& key) -> std::optional<std::string> {
        if (!doc.facets.empty() || comment.rfind(key, 0) != 0) return std::nullopt;
        std::string value = comment.substr(key.size());
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);
        return value;
      };
      if (auto value = header(" name:"); value && !value->empty() && !doc.name) {
        doc.name = *value;
      } else if (auto order = header(" vertices:")) {
        // Fixes the vertex order; labels must still appear in some facet.
        std::istringstream labels(*order);
        for (std::string label; labels >> label;) {
          if (known.insert(label).second) doc.vertices.push_back(label);
        }
      }
    }
    std::vector<std::string> facet;
    std::unordered_set<std::string> in_facet;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) {
        if (!label_char(body[i])) {
          throw ParseError(line_no, i + 1, std::string("invalid character '") + body[i] + "'");
        }
        ++i;
      }
      std::string label = body.substr(start, i - start);
      if (!in_facet.insert(label).second) {
        throw ParseError(line_no, start + 1, "vertex '" + label + "' repeated in facet");
      }
      if (known.insert(label).second) doc.vertices.push_back(label);
      facet.push_back(std::move(label));
    }
    if (!facet.empty()) doc.facets.push_back(std::move(facet));
  }
  return doc;
}

ComplexDocument parse_structured(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, "malformed JSON");
  }
  auto fail = [](const std::string& reason) { throw ParseError(1, 1, reason); };
  if (!j.is_object()) fail("expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail("missing 'vertices' array");
  if (!j.contains("facets") || !j["facets"].is_array()) fail("missing 'facets' array");
  ComplexDocument doc;
  doc.format = ComplexFormat::Structured;
  if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].get<std::string>();
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail("vertex labels must be strings");
    doc.vertices.push_back(v.get<std::string>());
  }
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) fail("each facet must be an array of labels");
    std::vector<std::string> facet;
    for (const auto& v : f) {
      if (!v.is_string()) fail("vertex labels must be strings");
      facet.push_back(v.get<std::string>());
    }
    doc.facets.push_back(std::move(facet));
  }
  return doc;
}

}  // namespace

ParsedComplex parse_complex_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  ComplexDocument doc = (first != std::string::npos && text[first] == '{')
                            ? parse_structured(text)
                            : parse_facet_text(text);
  SimplicialComplex complex = [&] {
    try {
      return SimplicialComplex::from_facets(doc.vertices, doc.facets);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what());
    }
  }();
  std::vector<std::string> warnings;
  if (complex.dropped_facets() > 0) {
    warnings.push_back(std::to_string(complex.dropped_facets()) +
                       " facet(s) dropped as duplicate or non-maximal");
  }
  return ParsedComplex{std::move(complex), std::move(doc), std::move(warnings)};
}

ParsedComplex parse_complex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex_text(buffer.str());
}

ComplexDocument to_document(const SimplicialComplex& complex, ComplexFormat format,
                            std::optional<std::string> name) {
  ComplexDocument doc;
  doc.format = format;
  doc.name = std::move(name);
  doc.vertices = complex.vertices();
  for (VertexSet facet : complex.facets()) doc.facets.push_back(complex.labels_of(facet));
  return doc;
}

std::string write_complex_text(const ComplexDocument& document) {
  if (document.format == ComplexFormat::Structured) {
    nlohmann::ordered_json j;
    if (document.name) j["name"] = *document.name;
    j["vertices"] = document.vertices;
    j["facets"] = document.facets;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (document.name) os << "# name: " << *document.name << "\n";
  os << "# vertices:";
  for (const auto& v : document.vertices) os << " " << v;
  os << "\n";
  for (const auto& facet : document.facets) {
    for (std::size_t i = 0; i < facet.size(); ++i) os << (i ? " " : "") << facet[i];
    os << "\n";
  }
  return os.str();
}

void write_complex(const ComplexDocument& document, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + path.string());
  out << write_complex_text(document);
}

ComplexFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? ComplexFormat::Structured : ComplexFormat::FacetText;
}

}  // namespace facering
