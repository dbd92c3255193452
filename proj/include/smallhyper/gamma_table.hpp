#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "smallhyper/subset.hpp"

namespace smallhyper {

/// Γ-operation table: carrier M of size n, index set Γ of size k, and the
/// map (a,γ,b) ↦ aγb stored as elements of the carrier. Closure MΓM ⊆ M
/// holds by construction (every cell is validated to be < n), and
/// well-definedness is automatic for a table-valued map.
class GammaTable {
 public:
  /// cells[(a*k + g)*n + b] = aγb, with γ = g.
  GammaTable(Carrier carrier, int gamma_size, std::vector<std::uint8_t> cells);

  int size() const { return carrier_.size(); }
  int gamma_size() const { return k_; }
  Carrier carrier() const { return carrier_; }

  int cell(int a, int g, int b) const {
    check_element(a);
    check_gamma(g);
    check_element(b);
    return cells_[(static_cast<std::size_t>(a) * k_ + g) * size() + b];
  }

  /// Unchecked fast path for inner loops.
  int cell_unchecked(int a, int g, int b) const {
    return cells_[(static_cast<std::size_t>(a) * k_ + g) * carrier_.size() + b];
  }

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  friend bool operator==(const GammaTable&, const GammaTable&) = default;

  /// Lexicographic on (n, k, row-major cells); the order behind canonical
  /// forms.
  friend bool operator<(const GammaTable& a, const GammaTable& b);

 private:
  void check_element(int i) const;
  void check_gamma(int g) const;

  Carrier carrier_;
  int k_;
  std::vector<std::uint8_t> cells_;
};

/// AΓB: every aγb with a ∈ A, γ ∈ Γ, b ∈ B. The whole of Γ always
/// participates. Both operands must be nonempty; the result always is.
Subset gamma_product(const GammaTable& t, const Subset& a, const Subset& b);

struct GammaAssociativityCheck {
  bool ok = true;
  /// Lexicographically least (a,γ,b,μ,c) with aγ(bμc) != (aγb)μc, when !ok.
  std::array<int, 5> tuple{0, 0, 0, 0, 0};

  explicit operator bool() const { return ok; }
};

/// Checks aγ(bμc) = (aγb)μc over all n^3·k^2 tuples.
GammaAssociativityCheck is_gamma_semigroup(const GammaTable& t);

namespace detail {

/// Least associativity violation on a raw cell table, or nullopt. Shared
/// with the exhaustive sweeps.
std::optional<std::array<int, 5>> gamma_assoc_violation(
    int n, int k, const std::uint8_t* cells);

}  // namespace detail

}  // namespace smallhyper
