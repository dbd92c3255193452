#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallhyper/structure.hpp"

namespace smallhyper {

/// Malformed or invalid structure text. The message carries line/column
/// for syntax errors and a JSON-path-style location for validation errors.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses a structure file body:
///   {"kind":"hypergroupoid","n":2,"table":[[[0],[0,1]],[[1],[0]]]}
///   {"kind":"gamma-groupoid","n":2,"k":1,"table":[[[0,1]],[[0,1]]]}
/// Hyper cells are sorted nonempty element arrays; gamma cells are single
/// elements indexed table[a][g][b].
Structure parse_structure(const std::string& text);

Structure load_structure_file(const std::filesystem::path& path);

/// Canonical serialization: sorted keys, sorted element arrays, no
/// whitespace. parse_structure(serialize_structure(s)) == s.
std::string serialize_structure(const Structure& s);
nlohmann::json structure_to_json(const Structure& s);

void write_structure_file(const std::filesystem::path& path,
                          const Structure& s);

/// Digest of the structure as used in reports and catalog filenames.
std::string structure_digest(const Structure& s);

/// "hyper_n2_<digest>.json" / "gamma_n2_k1_<digest>.json".
std::string catalog_filename(const Structure& s);

struct CatalogEntry {
  Structure structure;
  /// Property vector recorded in the index (decider outcomes, counts).
  nlohmann::json properties;
};

/// Writes one structure file per entry plus index.json holding counts and
/// the property vectors. The directory is created if missing.
void write_catalog(const std::filesystem::path& dir,
                   const std::vector<CatalogEntry>& entries,
                   const nlohmann::json& meta);

}  // namespace smallhyper
