#ifndef TEMPDUAL_CATALOG_HPP
#define TEMPDUAL_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tempdual {

inline constexpr const char* kToolVersion = "1.0.0";

enum class DocumentKind {
  Partitions,
  RealComponents,
  ComplexComponents,
  KReal,
  KComplex,
  BaseChange,
  KMap,
};

const char* to_string(DocumentKind kind);
std::optional<DocumentKind> document_kind_from_string(std::string_view name);

/// Builds a catalog document:
///   { "tool_version", "kind", "n", "cutoff", "payload": {...} }
/// Keys are sorted, so dumping is deterministic. Domain errors from the
/// engine propagate as std::domain_error.
nlohmann::json build_document(DocumentKind kind, int n, int cutoff);

/// Two-space indented JSON with a trailing newline.
std::string to_json_text(const nlohmann::json& doc);

/// Aligned text rendering of a document produced by build_document.
std::string render_table(const nlohmann::json& doc);

}  // namespace tempdual

#endif  // TEMPDUAL_CATALOG_HPP
