#include "smallhyper/structure_io.hpp"

#include <fstream>
#include <sstream>

#include "smallhyper/version.hpp"

namespace smallhyper {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text,
                                                    std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int require_int(const json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) {
    parse_fail(where, "value " + std::to_string(v) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

const json& require_array(const json& j, const std::string& where,
                          std::size_t size) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  if (j.size() != size) {
    parse_fail(where, "expected " + std::to_string(size) + " entries, got " +
                          std::to_string(j.size()));
  }
  return j;
}

Structure parse_hyper(const json& j, int n) {
  const Carrier carrier(n);
  const json& table = require_array(j.at("table"), "table",
                                    static_cast<std::size_t>(n));
  std::vector<Subset> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const std::string row = "table[" + std::to_string(a) + "]";
    const json& row_json = table.at(static_cast<std::size_t>(a));
    if (!row_json.is_array() || row_json.size() != static_cast<std::size_t>(n)) {
      parse_fail(row, "expected " + std::to_string(n) + " cells");
    }
    for (int b = 0; b < n; ++b) {
      const std::string where = row + "[" + std::to_string(b) + "]";
      const json& cell = row_json.at(static_cast<std::size_t>(b));
      if (!cell.is_array()) parse_fail(where, "expected an element array");
      if (cell.empty()) parse_fail(where, "hyperoperation cell is empty");
      mask_t mask = 0;
      for (const json& e : cell) {
        mask |= mask_t{1} << require_int(e, where, 0, n - 1);
      }
      cells.push_back(Subset::from_mask(carrier, mask));
    }
  }
  return HyperTable(carrier, std::move(cells));
}

Structure parse_gamma(const json& j, int n) {
  if (!j.contains("k")) parse_fail("", "gamma-groupoid files need \"k\"");
  const int k = require_int(j.at("k"), "k", 1, 64);
  const Carrier carrier(n);
  const json& table = require_array(j.at("table"), "table",
                                    static_cast<std::size_t>(n));
  std::vector<std::uint8_t> cells(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(k) * n);
  for (int a = 0; a < n; ++a) {
    const std::string row = "table[" + std::to_string(a) + "]";
    const json& row_json = table.at(static_cast<std::size_t>(a));
    if (!row_json.is_array() || row_json.size() != static_cast<std::size_t>(k)) {
      parse_fail(row, "expected " + std::to_string(k) + " gamma slices");
    }
    for (int g = 0; g < k; ++g) {
      const std::string slice = row + "[" + std::to_string(g) + "]";
      const json& slice_json = row_json.at(static_cast<std::size_t>(g));
      if (!slice_json.is_array() ||
          slice_json.size() != static_cast<std::size_t>(n)) {
        parse_fail(slice, "expected " + std::to_string(n) + " entries");
      }
      for (int b = 0; b < n; ++b) {
        const std::string where = slice + "[" + std::to_string(b) + "]";
        cells[(static_cast<std::size_t>(a) * k + g) * n + b] =
            static_cast<std::uint8_t>(
                require_int(slice_json.at(static_cast<std::size_t>(b)), where,
                            0, n - 1));
      }
    }
  }
  return GammaTable(carrier, k, std::move(cells));
}

}  // namespace

Structure parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    parse_fail("line " + std::to_string(line) + ", column " +
                   std::to_string(col),
               "JSON syntax error");
  }
  if (!j.is_object()) parse_fail("", "expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    parse_fail("kind", "expected \"hypergroupoid\" or \"gamma-groupoid\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (!j.contains("n")) parse_fail("", "missing \"n\"");
  const int n = require_int(j.at("n"), "n", 1, Carrier::kMaxSize);
  if (!j.contains("table")) parse_fail("", "missing \"table\"");
  if (kind == "hypergroupoid") return parse_hyper(j, n);
  if (kind == "gamma-groupoid") return parse_gamma(j, n);
  parse_fail("kind", "unknown kind \"" + kind + "\"");
}

Structure load_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_structure(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::json structure_to_json(const Structure& s) {
  json out;
  out["kind"] = structure_kind_name(kind_of(s));
  if (const auto* h = std::get_if<HyperTable>(&s)) {
    const int n = h->size();
    out["n"] = n;
    json table = json::array();
    for (int a = 0; a < n; ++a) {
      json row = json::array();
      for (int b = 0; b < n; ++b) row.push_back(h->cell(a, b).elements());
      table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
  } else {
    const auto& g = std::get<GammaTable>(s);
    const int n = g.size();
    const int k = g.gamma_size();
    out["n"] = n;
    out["k"] = k;
    json table = json::array();
    for (int a = 0; a < n; ++a) {
      json row = json::array();
      for (int gi = 0; gi < k; ++gi) {
        json slice = json::array();
        for (int b = 0; b < n; ++b) slice.push_back(g.cell(a, gi, b));
        row.push_back(std::move(slice));
      }
      table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
  }
  return out;
}

std::string serialize_structure(const Structure& s) {
  return structure_to_json(s).dump();
}

void write_structure_file(const std::filesystem::path& path,
                          const Structure& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_structure(s) << "\n";
}

std::string structure_digest(const Structure& s) {
  return digest_string(fingerprint(s));
}

std::string catalog_filename(const Structure& s) {
  std::ostringstream os;
  if (kind_of(s) == StructureKind::Hyper) {
    os << "hyper_n" << carrier_size_of(s);
  } else {
    os << "gamma_n" << carrier_size_of(s) << "_k" << gamma_size_of(s);
  }
  os << "_" << structure_digest(s) << ".json";
  return os.str();
}

void write_catalog(const std::filesystem::path& dir,
                   const std::vector<CatalogEntry>& entries,
                   const nlohmann::json& meta) {
  std::filesystem::create_directories(dir);
  json index_entries = json::array();
  for (const CatalogEntry& entry : entries) {
    const std::string filename = catalog_filename(entry.structure);
    write_structure_file(dir / filename, entry.structure);
    json record{{"file", filename},
                {"digest", structure_digest(entry.structure)},
                {"kind", structure_kind_name(kind_of(entry.structure))},
                {"n", carrier_size_of(entry.structure)},
                {"properties", entry.properties}};
    if (kind_of(entry.structure) == StructureKind::Gamma) {
      record["k"] = gamma_size_of(entry.structure);
    }
    index_entries.push_back(std::move(record));
  }
  const json index{{"tool", kToolName},
                   {"version", kToolVersion},
                   {"meta", meta},
                   {"count", entries.size()},
                   {"entries", std::move(index_entries)}};
  std::ofstream out(dir / "index.json", std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + (dir / "index.json").string());
  }
  out << index.dump(2) << "\n";
}

}  // namespace smallhyper
