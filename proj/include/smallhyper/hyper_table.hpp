#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smallhyper/subset.hpp"

namespace smallhyper {

/// Hyperoperation table on a finite carrier: cell (a,b) holds the nonempty
/// subset a∘b. Immutable after construction; all cells are validated to be
/// nonempty subsets of the carrier, so closure of the induced product holds
/// by construction.
class HyperTable {
 public:
  /// cells in row-major order: cells[a*n + b] = a∘b.
  HyperTable(Carrier carrier, std::vector<Subset> cells);

  int size() const { return carrier_.size(); }
  Carrier carrier() const { return carrier_; }

  const Subset& cell(int a, int b) const {
    check_index(a);
    check_index(b);
    return cells_[static_cast<std::size_t>(a) * size() + b];
  }

  /// Unchecked fast path for inner loops.
  mask_t cell_mask(int a, int b) const {
    return cells_[static_cast<std::size_t>(a) * carrier_.size() + b].mask();
  }

  const std::vector<Subset>& cells() const { return cells_; }

  friend bool operator==(const HyperTable&, const HyperTable&) = default;

  /// Lexicographic on (n, row-major cell masks); the order behind canonical
  /// forms.
  friend bool operator<(const HyperTable& a, const HyperTable& b);

 private:
  void check_index(int i) const;

  Carrier carrier_;
  std::vector<Subset> cells_;
};

/// The hyperoperation itself: the table cell a∘b.
const Subset& hyper_product(const HyperTable& t, int a, int b);

/// Induced product on nonempty subsets: union of a∘b over all pairs
/// (a,b) in A×B. Both operands must be nonempty; the result always is.
Subset star(const HyperTable& t, const Subset& a, const Subset& b);

/// Left fold of star over one or more nonempty parts. Requires an
/// associative table, which makes every other parenthesization equal.
Subset star_chain(const HyperTable& t, std::span<const Subset> parts);

struct AssociativityCheck {
  bool ok = true;
  /// Lexicographically least (x,y,z) with {x}*(y∘z) != (x∘y)*{z}, when !ok.
  std::array<int, 3> triple{0, 0, 0};

  explicit operator bool() const { return ok; }
};

/// Checks the defining identity {x}*(y∘z) = (x∘y)*{z} over all n^3 element
/// triples. The lift to arbitrary subset triples is a consequence, tested
/// separately, not part of the decision procedure.
AssociativityCheck is_hypersemigroup(const HyperTable& t);

struct HypergroupCheck {
  enum class Failure { None, NoIdentity, MissingInverse };

  bool ok = false;
  /// Every e with a∘e = e∘a = {a} for all a. More than one would be a
  /// structural anomaly (two scalar identities force each other equal);
  /// the scan records all of them rather than assuming.
  std::vector<int> identities;
  /// inverses[a] = least b with a∘b = b∘a = {e}, when ok.
  std::vector<int> inverses;
  Failure failure = Failure::NoIdentity;
  int element_without_inverse = -1;

  bool anomalous_identities() const { return identities.size() > 1; }
  explicit operator bool() const { return ok; }
};

/// Decides the hypergroup axioms on a hypersemigroup: a scalar identity e
/// and, for every a, an inverse with a∘a⁻¹ = a⁻¹∘a = {e}. Throws
/// std::invalid_argument if the table is not a hypersemigroup.
HypergroupCheck is_hypergroup(const HyperTable& t);

namespace detail {

/// Least associativity violation on a raw mask table (cells[a*n + b]),
/// or nullopt. Shared by the table decider and the exhaustive sweeps,
/// which run it on odometer buffers without materializing tables.
std::optional<std::array<int, 3>> hyper_assoc_violation(int n,
                                                        const mask_t* cells);

}  // namespace detail

}  // namespace smallhyper
