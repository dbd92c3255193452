#include "smallhyper/structure.hpp"

#include <variant>

namespace smallhyper {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_byte(std::uint64_t& h, std::uint8_t b) {
  h ^= b;
  h *= kFnvPrime;
}

void fnv_u64(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) fnv_byte(h, static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::string structure_kind_name(StructureKind kind) {
  return kind == StructureKind::Hyper ? "hypergroupoid" : "gamma-groupoid";
}

StructureKind kind_of(const Structure& s) {
  return std::holds_alternative<HyperTable>(s) ? StructureKind::Hyper
                                               : StructureKind::Gamma;
}

int carrier_size_of(const Structure& s) {
  return std::visit([](const auto& t) { return t.size(); }, s);
}

int gamma_size_of(const Structure& s) {
  if (const auto* g = std::get_if<GammaTable>(&s)) return g->gamma_size();
  return 0;
}

std::uint64_t fingerprint(const HyperTable& t) {
  std::uint64_t h = kFnvOffset;
  fnv_byte(h, 'H');
  fnv_byte(h, static_cast<std::uint8_t>(t.size()));
  for (const Subset& cell : t.cells()) fnv_u64(h, cell.mask());
  return h;
}

std::uint64_t fingerprint(const GammaTable& t) {
  std::uint64_t h = kFnvOffset;
  fnv_byte(h, 'G');
  fnv_byte(h, static_cast<std::uint8_t>(t.size()));
  fnv_byte(h, static_cast<std::uint8_t>(t.gamma_size()));
  for (std::uint8_t cell : t.cells()) fnv_byte(h, cell);
  return h;
}

std::uint64_t fingerprint(const Structure& s) {
  return std::visit([](const auto& t) { return fingerprint(t); }, s);
}

std::string digest_string(std::uint64_t fp) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[fp & 0xf];
    fp >>= 4;
  }
  return out;
}

}  // namespace smallhyper
