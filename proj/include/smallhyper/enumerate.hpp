#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "smallhyper/ideals.hpp"
#include "smallhyper/structure.hpp"

namespace smallhyper {

/// Largest table space an exhaustive command walks without an explicit
/// override; equals the hyper n=3 space, the biggest sweep meant to run at
/// desk scale.
inline constexpr std::uint64_t kDefaultBudget = 40'353'607;

/// Raised when an exhaustive operation would have to walk more tables than
/// the budget allows; carries the computed space size.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t space, std::uint64_t budget);

  std::uint64_t space() const { return space_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t space_;
  std::uint64_t budget_;
};

/// (2^n - 1)^(n^2), saturating at UINT64_MAX.
std::uint64_t hyper_space_size(int n);

/// n^(n*k*n), saturating at UINT64_MAX.
std::uint64_t gamma_space_size(int n, int k);

enum class EnumFilter { None, SemigroupOnly };
enum class DedupMode { Raw, UpToIso };

struct EnumerationSpec {
  StructureKind kind = StructureKind::Hyper;
  int n = 1;
  int k = 1;  // gamma only
  EnumFilter filter = EnumFilter::None;
  DedupMode dedup = DedupMode::Raw;
  std::uint64_t budget = kDefaultBudget;
};

/// Walks the full table space in ascending order (cells read as mixed-radix
/// digits, cell (0,0[,0]) most significant) and yields each table passing
/// the filter, either every one (Raw) or exactly the canonical
/// representative of each isomorphism class (UpToIso). Throws
/// BudgetExceeded before touching anything if the space is over budget.
void enumerate_structures(const EnumerationSpec& spec,
                          const std::function<void(const Structure&)>& yield);

/// Relabels a hyper table along a carrier permutation: the image table maps
/// (σa, σb) to σ[a∘b].
HyperTable relabeled(const HyperTable& t, std::span<const int> perm);

/// Relabels a Γ table along a carrier permutation and a Γ permutation.
GammaTable relabeled(const GammaTable& t, std::span<const int> carrier_perm,
                     std::span<const int> gamma_perm);

/// Lexicographically least table in the isomorphism orbit, by full
/// permutation scan (carrier permutations; for Γ tables also Γ
/// permutations). Idempotent and constant on orbits. Capped at carrier
/// and Γ size 8 — beyond that the factorial scan is not meant to run.
HyperTable canonical_form(const HyperTable& t);
GammaTable canonical_form(const GammaTable& t);
Structure canonical_form(const Structure& s);

/// A hypersemigroup that answers the open problem: no proper bi-ideals,
/// yet not a hypergroup. All three facts are re-verified from scratch at
/// construction, independent of whatever search produced the table.
struct ProblemWitness {
  HyperTable table;
  std::vector<Subset> bi_ideals;      // certificate: exactly {full carrier}
  HypergroupCheck hypergroup_failure; // why the hypergroup axioms fail
};

/// Validates and packages a witness; throws std::invalid_argument if the
/// table is not associative, has a proper bi-ideal, or is a hypergroup.
ProblemWitness make_problem_witness(const HyperTable& t);

struct ProblemSearchOptions {
  DedupMode dedup = DedupMode::Raw;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  std::uint64_t seed = 0;  // unused by the search itself; recorded upstream
};

struct ProblemSearchReport {
  int n_from = 1;
  int n_to = 1;
  /// (n, witness count) for every size actually searched.
  std::vector<std::pair<int, std::uint64_t>> witnesses_per_n;
  std::vector<ProblemWitness> witnesses;
  /// False when some size in the range was refused for budget; the partial
  /// results for smaller sizes are still valid.
  bool complete = true;
  int first_refused_n = -1;
};

/// Exhaustive witness search over carrier sizes n_from..n_to. Sizes are
/// searched in order and witnesses reported per size (ascending table
/// index; canonical representatives only under UpToIso), so results for
/// small sizes survive a budget refusal at a larger one. on_witness, when
/// set, streams witnesses in that same deterministic order.
ProblemSearchReport search_problem(
    int n_from, int n_to, const ProblemSearchOptions& options = {},
    const std::function<void(int, const ProblemWitness&)>& on_witness = {});

namespace detail {

/// Walks hyper tables with indices in [begin, end) over the n^2-digit
/// mixed-radix space, invoking fn(index, cells) with cells[a*n + b] the
/// current cell masks. The buffer is reused between calls.
void scan_hyper_raw(int n, std::uint64_t begin, std::uint64_t end,
                    const std::function<void(std::uint64_t, const mask_t*)>& fn);

/// Gamma analogue; cells[(a*k + g)*n + b] are carrier elements.
void scan_gamma_raw(int n, int k, std::uint64_t begin, std::uint64_t end,
                    const std::function<void(std::uint64_t, const std::uint8_t*)>& fn);

HyperTable hyper_from_masks(int n, const mask_t* cells);
GammaTable gamma_from_cells(int n, int k, const std::uint8_t* cells);

}  // namespace detail

}  // namespace smallhyper
