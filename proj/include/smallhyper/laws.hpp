#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallhyper/enumerate.hpp"
#include "smallhyper/structure.hpp"

namespace smallhyper {

/// Seed for the sampled subset checks when none is given on the command
/// line. Per-structure sampling is derived from this and the structure
/// fingerprint, so outcomes do not depend on scan partitioning.
inline constexpr std::uint64_t kDefaultSeed = 424242;

enum class LawOutcome { Pass, Fail, NotApplicable };

std::string law_outcome_name(LawOutcome o);

struct LawResult {
  std::string id;
  LawOutcome outcome = LawOutcome::Pass;
  /// Not-applicable reason, or a short failure description.
  std::string detail;
  /// Replayable failure record (elements and subsets involved); null
  /// unless the outcome is Fail.
  nlohmann::json counterexample;
  std::uint64_t time_us = 0;
};

struct LawCheckInfo {
  enum class Level { Groupoid, Semigroup, Hypergroup };

  std::string id;
  StructureKind kind;
  Level level;
};

/// The fixed registry of checks, one per law in the bundled catalog, in
/// id order. Groupoid-level checks run on every table of their
/// kind; semigroup-level ones are skipped (not-applicable) on
/// non-associative tables; the hypergroup-level one additionally skips
/// non-hypergroups.
const std::vector<LawCheckInfo>& law_registry();

struct LawReport {
  std::string kind;  // "hypergroupoid" | "gamma-groupoid"
  int n = 0;
  int k = 0;  // 0 for hyper
  std::string digest;
  std::uint64_t seed = kDefaultSeed;
  std::vector<LawResult> results;

  int failures() const;
  bool all_passed() const { return failures() == 0; }

  nlohmann::json to_json() const;
  std::string human_summary() const;
};

/// Runs every check of the structure's kind; the report is deterministic
/// for a given structure and seed.
LawReport verify_structure(const HyperTable& t,
                           std::uint64_t seed = kDefaultSeed);
LawReport verify_structure(const GammaTable& t,
                           std::uint64_t seed = kDefaultSeed);
LawReport verify_structure(const Structure& s,
                           std::uint64_t seed = kDefaultSeed);

/// The hypergroup law T3.13 on its own: not-applicable unless the table
/// is a hypergroup, otherwise asserts the only bi-ideal is the full
/// carrier.
LawResult check_t313(const HyperTable& t);

struct SweepOptions {
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::uint64_t budget = kDefaultBudget;
  /// Run groupoid-level checks on every table rather than only on the
  /// associative ones. Defaults to on for spaces up to
  /// kGroupoidCheckSpaceCap, off beyond.
  std::optional<bool> checks_on_all_tables;
};

/// Above this space size a sweep restricts per-table law checks to the
/// associative tables (associativity itself is still decided for every
/// table).
inline constexpr std::uint64_t kGroupoidCheckSpaceCap = 100'000;

struct SweepCheckStat {
  std::string id;
  std::uint64_t runs = 0;           // pass + fail executions
  std::uint64_t failures = 0;
  std::uint64_t not_applicable = 0;
};

struct SweepFailure {
  std::uint64_t table_index = 0;
  std::string structure_json;
  LawResult result;
};

struct SweepReport {
  StructureKind kind = StructureKind::Hyper;
  int n = 0;
  int k = 0;
  std::uint64_t space = 0;
  std::uint64_t scanned = 0;
  std::uint64_t associative = 0;
  std::vector<SweepCheckStat> checks;   // registry order
  std::uint64_t failure_count = 0;
  std::vector<SweepFailure> failures;   // deterministic sample, lowest table indices
  std::uint64_t seed = kDefaultSeed;
  bool groupoid_checks_on_all = true;
  std::uint64_t elapsed_us = 0;

  nlohmann::json to_json() const;
  std::string human_summary() const;
};

/// verify_structure over every table of the given size, partitioned across
/// workers by table index. Aggregation is order-independent and the report
/// identical for any worker count. Throws BudgetExceeded when the space is
/// over budget. k is ignored for hyper sweeps.
SweepReport verify_exhaustive(StructureKind kind, int n, int k = 1,
                              const SweepOptions& options = {});

}  // namespace smallhyper
