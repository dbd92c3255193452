#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "smallhyper/gamma_table.hpp"
#include "smallhyper/hyper_table.hpp"

namespace smallhyper {

enum class StructureKind { Hyper, Gamma };

/// "hypergroupoid" / "gamma-groupoid", the kind tags used in files.
std::string structure_kind_name(StructureKind kind);

using Structure = std::variant<HyperTable, GammaTable>;

StructureKind kind_of(const Structure& s);
int carrier_size_of(const Structure& s);
/// Γ size for gamma structures, 0 for hyper ones.
int gamma_size_of(const Structure& s);

/// 64-bit FNV-1a over a canonical byte encoding of the table. Stable
/// across runs and platforms; the digest reports and catalogs key on.
std::uint64_t fingerprint(const HyperTable& t);
std::uint64_t fingerprint(const GammaTable& t);
std::uint64_t fingerprint(const Structure& s);

/// fingerprint as 16 hex digits.
std::string digest_string(std::uint64_t fp);

}  // namespace smallhyper
