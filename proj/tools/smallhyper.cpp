// Command-line front end: load structure files, decide properties, list
// ideals, run the law harness, enumerate table spaces, and search for
// witnesses to the open problem.
//
// Exit codes: 0 = success / property holds / witness found,
//             1 = property fails / no witness,
//             2 = usage, parse, or budget error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smallhyper/enumerate.hpp"
#include "smallhyper/ideals.hpp"
#include "smallhyper/laws.hpp"
#include "smallhyper/structure.hpp"
#include "smallhyper/structure_io.hpp"
#include "smallhyper/subset_algebra.hpp"
#include "smallhyper/version.hpp"

namespace {

using nlohmann::json;
using namespace smallhyper;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string output;
  int workers = 0;  // 0 = auto
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultBudget;
};

int effective_workers(int flag) {
  if (flag > 0) return flag;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

void write_output_file(const std::string& path, const json& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body.dump(2) << "\n";
}

std::string triple_text(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

std::string tuple_text(const std::array<int, 5>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

/// Associativity verdict plus the human-readable failure location.
std::pair<bool, std::string> associativity_of(const Structure& s) {
  if (const auto* h = std::get_if<HyperTable>(&s)) {
    const auto check = is_hypersemigroup(*h);
    return {check.ok, check.ok ? "" : triple_text(check.triple)};
  }
  const auto check = is_gamma_semigroup(std::get<GammaTable>(s));
  return {check.ok, check.ok ? "" : tuple_text(check.tuple)};
}

SubsetAlgebra algebra_of(const Structure& s, bool associative) {
  if (const auto* h = std::get_if<HyperTable>(&s)) {
    return subset_algebra(*h, associative);
  }
  return subset_algebra(std::get<GammaTable>(s), associative);
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

struct Verdict {
  bool holds = false;
  std::string detail;
};

Verdict decide_property(const Structure& s, const std::string& property) {
  const bool hyper = kind_of(s) == StructureKind::Hyper;
  const auto [associative, where] = associativity_of(s);

  if (property == "hypersemigroup" || property == "gamma-semigroup") {
    const bool want_hyper = property == "hypersemigroup";
    if (hyper != want_hyper) {
      throw std::invalid_argument("property " + property +
                                  " does not apply to a " +
                                  structure_kind_name(kind_of(s)) + " file");
    }
    return {associative,
            associative ? "" : "identity fails at " + where};
  }
  if (property == "hypergroup") {
    if (!hyper) {
      throw std::invalid_argument(
          "property hypergroup does not apply to a gamma-groupoid file");
    }
    if (!associative) {
      return {false, "not a hypersemigroup; identity fails at " + where};
    }
    const auto hg = is_hypergroup(std::get<HyperTable>(s));
    if (hg.ok) {
      std::string detail = "identity e=" + std::to_string(hg.identities.front());
      if (hg.anomalous_identities()) detail += " (anomaly: several identities)";
      return {true, detail};
    }
    if (hg.failure == HypergroupCheck::Failure::NoIdentity) {
      return {false, "no identity element"};
    }
    return {false, "element " + std::to_string(hg.element_without_inverse) +
                       " has no inverse"};
  }
  if (property == "regular") {
    if (associative) {
      return {is_regular(algebra_of(s, true)), ""};
    }
    if (hyper) {
      // non-associative tables: the hypergroupoid-level definition
      return {is_regular_hypergroupoid_form(std::get<HyperTable>(s)),
              "hypergroupoid-level form (table is not a hypersemigroup)"};
    }
    return {false, "not a gamma-semigroup (regularity needs associativity); "
                   "identity fails at " + where};
  }
  if (property == "left-simple") {
    return {is_left_simple(algebra_of(s, associative)), ""};
  }
  if (property == "right-simple") {
    return {is_right_simple(algebra_of(s, associative)), ""};
  }
  if (property == "no-proper-bi-ideals") {
    if (!associative) {
      return {false, "not associative; bi-ideals need an unambiguous triple "
                     "product; identity fails at " + where};
    }
    const auto bi = enumerate_ideals(algebra_of(s, true), IdealKind::BiIdeal);
    if (bi.size() == 1 && bi.front().is_full()) return {true, ""};
    return {false, std::to_string(bi.size() - 1) + " proper bi-ideal(s), "
                   "least is " + to_string(bi.front())};
  }
  throw std::invalid_argument("unknown property " + property);
}

int run_check(const std::string& file, const std::string& property,
              const GlobalOptions& global) {
  const Structure s = load_structure_file(file);
  const Verdict verdict = decide_property(s, property);
  std::cout << property << ": " << (verdict.holds ? "holds" : "fails");
  if (!verdict.detail.empty()) std::cout << " (" << verdict.detail << ")";
  std::cout << "\n";
  if (!global.output.empty()) {
    json body{{"tool", kToolName},
              {"version", kToolVersion},
              {"structure",
               {{"kind", structure_kind_name(kind_of(s))},
                {"n", carrier_size_of(s)},
                {"digest", structure_digest(s)}}},
              {"property", property},
              {"holds", verdict.holds}};
    if (kind_of(s) == StructureKind::Gamma) {
      body["structure"]["k"] = gamma_size_of(s);
    }
    if (!verdict.detail.empty()) body["detail"] = verdict.detail;
    write_output_file(global.output, body);
  }
  return verdict.holds ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------------
// ideals
// ---------------------------------------------------------------------

std::optional<IdealKind> ideal_kind_from_name(const std::string& name) {
  for (IdealKind kind :
       {IdealKind::LeftIdeal, IdealKind::RightIdeal, IdealKind::TwoSidedIdeal,
        IdealKind::BiIdeal, IdealKind::Subsemigroup,
        IdealKind::SubidempotentBiIdeal}) {
    if (ideal_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

int run_ideals(const std::string& file, const std::string& kind_name,
               const std::vector<std::string>& principal) {
  const Structure s = load_structure_file(file);
  const auto [associative, where] = associativity_of(s);
  const SubsetAlgebra algebra = algebra_of(s, associative);

  if (!principal.empty()) {
    const std::string& side = principal[0];
    if (side != "left" && side != "right") {
      throw std::invalid_argument("--principal side must be left or right");
    }
    const int b = std::stoi(principal[1]);
    if (b < 0 || b >= algebra.carrier_n) {
      throw std::invalid_argument("element " + principal[1] +
                                  " outside carrier of size " +
                                  std::to_string(algebra.carrier_n));
    }
    if (!associative) {
      std::cout << "not associative; identity fails at " << where << "\n";
      return kExitFails;
    }
    const Subset ideal = side == "left" ? principal_left_ideal(algebra, b)
                                        : principal_right_ideal(algebra, b);
    std::cout << json(ideal.elements()).dump() << "\n";
    return kExitHolds;
  }

  const auto kind = ideal_kind_from_name(kind_name);
  if (!kind) throw std::invalid_argument("unknown ideal kind " + kind_name);
  const bool needs_assoc = *kind == IdealKind::BiIdeal ||
                           *kind == IdealKind::SubidempotentBiIdeal;
  if (needs_assoc && !associative) {
    std::cout << "not associative; identity fails at " << where << "\n";
    return kExitFails;
  }
  for (const Subset& ideal : enumerate_ideals(algebra, *kind)) {
    std::cout << json(ideal.elements()).dump() << "\n";
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

int run_verify_file(const std::string& file, const GlobalOptions& global) {
  const Structure s = load_structure_file(file);
  const LawReport report = verify_structure(s, global.seed);
  std::cout << report.human_summary();
  if (!global.output.empty()) write_output_file(global.output, report.to_json());
  return report.all_passed() ? kExitHolds : kExitFails;
}

int run_verify_exhaustive(const std::vector<std::string>& args,
                          const GlobalOptions& global) {
  const std::string& kind_name = args[0];
  StructureKind kind;
  if (kind_name == "hyper") {
    kind = StructureKind::Hyper;
  } else if (kind_name == "gamma") {
    kind = StructureKind::Gamma;
  } else {
    throw std::invalid_argument("--exhaustive kind must be hyper or gamma");
  }
  const int n = std::stoi(args[1]);
  const int k = args.size() > 2 ? std::stoi(args[2]) : 1;
  if (kind == StructureKind::Gamma && args.size() < 3) {
    throw std::invalid_argument("--exhaustive gamma needs n and k");
  }
  SweepOptions options;
  options.seed = global.seed;
  options.workers = effective_workers(global.workers);
  options.budget = global.budget;
  const SweepReport report = verify_exhaustive(kind, n, k, options);
  std::cout << report.human_summary();
  if (!global.output.empty()) write_output_file(global.output, report.to_json());
  return report.failure_count == 0 ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------

json structure_properties(const Structure& s) {
  const auto [associative, where] = associativity_of(s);
  json props{{"associative", associative}};
  if (!associative) return props;
  const SubsetAlgebra algebra = algebra_of(s, true);
  props["regular"] = is_regular(algebra);
  props["left_simple"] = is_left_simple(algebra);
  props["right_simple"] = is_right_simple(algebra);
  props["bi_ideal_count"] =
      enumerate_ideals(algebra, IdealKind::BiIdeal).size();
  if (const auto* h = std::get_if<HyperTable>(&s)) {
    props["hypergroup"] = is_hypergroup(*h).ok;
  }
  return props;
}

int run_enumerate(const std::string& kind_name, int n, int k,
                  const std::string& filter_name, const std::string& dedup_name,
                  const std::string& catalog_dir, const GlobalOptions& global) {
  EnumerationSpec spec;
  spec.kind = kind_name == "hyper" ? StructureKind::Hyper : StructureKind::Gamma;
  spec.n = n;
  spec.k = k;
  spec.filter = filter_name == "semigroup" ? EnumFilter::SemigroupOnly
                                           : EnumFilter::None;
  spec.dedup = dedup_name == "iso" ? DedupMode::UpToIso : DedupMode::Raw;
  spec.budget = global.budget;

  const std::uint64_t space = spec.kind == StructureKind::Hyper
                                  ? hyper_space_size(n)
                                  : gamma_space_size(n, k);
  std::uint64_t emitted = 0;
  std::vector<CatalogEntry> entries;
  if (spec.filter == EnumFilter::None && spec.dedup == DedupMode::Raw &&
      catalog_dir.empty()) {
    if (space > spec.budget) throw BudgetExceeded(space, spec.budget);
    emitted = space;  // nothing to compute per table
  } else {
    enumerate_structures(spec, [&](const Structure& s) {
      ++emitted;
      if (!catalog_dir.empty()) {
        entries.push_back(CatalogEntry{s, structure_properties(s)});
      }
    });
  }
  std::cout << "space: " << space << "\n" << "emitted: " << emitted << "\n";
  if (!catalog_dir.empty()) {
    json meta{{"command", "enumerate"},
              {"kind", kind_name},
              {"n", n},
              {"filter", filter_name},
              {"dedup", dedup_name}};
    if (spec.kind == StructureKind::Gamma) meta["k"] = k;
    write_catalog(catalog_dir, entries, meta);
    std::cout << "catalog: " << catalog_dir << "\n";
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------
// search-problem
// ---------------------------------------------------------------------

int run_search_problem(int n_from, int n_to, bool dedup,
                       const GlobalOptions& global) {
  ProblemSearchOptions options;
  options.dedup = dedup ? DedupMode::UpToIso : DedupMode::Raw;
  options.budget = global.budget;
  options.workers = effective_workers(global.workers);

  const ProblemSearchReport report = search_problem(n_from, n_to, options);

  if (report.witnesses_per_n.empty()) {
    std::cerr << "budget exceeded before any size was searched: n="
              << report.first_refused_n << " has "
              << hyper_space_size(report.first_refused_n) << " tables\n";
    return kExitUsage;
  }

  for (const auto& [n, count] : report.witnesses_per_n) {
    std::cout << "n=" << n << ": " << count << " witness(es)\n";
  }
  if (!report.complete) {
    std::cout << "partial: n=" << report.first_refused_n
              << " exceeds the budget ("
              << hyper_space_size(report.first_refused_n) << " tables)\n";
  }

  const std::filesystem::path dir =
      global.output.empty() ? std::filesystem::path("problem-witnesses")
                            : std::filesystem::path(global.output);
  std::vector<CatalogEntry> entries;
  for (const ProblemWitness& witness : report.witnesses) {
    json bi = json::array();
    for (const Subset& b : witness.bi_ideals) bi.push_back(b.elements());
    const auto& hg = witness.hypergroup_failure;
    json failure;
    if (hg.failure == HypergroupCheck::Failure::NoIdentity) {
      failure = json{{"reason", "no-identity"}};
    } else {
      failure = json{{"reason", "missing-inverse"},
                     {"element", hg.element_without_inverse},
                     {"identity", hg.identities.front()}};
    }
    entries.push_back(CatalogEntry{
        Structure{witness.table},
        json{{"hypersemigroup", true},
             {"bi_ideals", std::move(bi)},
             {"hypergroup", false},
             {"hypergroup_failure", std::move(failure)}}});
  }
  json meta{{"command", "search-problem"},
            {"n_from", n_from},
            {"n_to", n_to},
            {"dedup", dedup},
            {"complete", report.complete}};
  write_catalog(dir, entries, meta);
  std::cout << "catalog: " << dir.string() << "\n";

  return report.witnesses.empty() ? kExitFails : kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite hypersemigroup and gamma-semigroup toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--output", global.output,
                 "path for the machine-readable report or catalog");
  app.add_option("--workers", global.workers,
                 "worker threads for exhaustive commands (0 = auto)");
  app.add_option("--seed", global.seed,
                 "seed for the sampled law checks (default 424242)");
  app.add_option("--budget-override", global.budget,
                 "max table-space size an exhaustive command may walk");

  // check
  std::string check_file, check_property;
  auto* check = app.add_subcommand("check", "decide a property of a structure");
  check->fallthrough();
  check->add_option("file", check_file, "structure file")->required();
  check
      ->add_option("--property", check_property,
                   "hypersemigroup | gamma-semigroup | hypergroup | regular | "
                   "left-simple | right-simple | no-proper-bi-ideals")
      ->required()
      ->check(CLI::IsMember({"hypersemigroup", "gamma-semigroup", "hypergroup",
                             "regular", "left-simple", "right-simple",
                             "no-proper-bi-ideals"}));

  // ideals
  std::string ideals_file, ideals_kind;
  std::vector<std::string> ideals_principal;
  auto* ideals = app.add_subcommand("ideals", "list ideals of a structure");
  ideals->fallthrough();
  ideals->add_option("file", ideals_file, "structure file")->required();
  auto* kind_opt = ideals->add_option(
      "--kind", ideals_kind,
      "left | right | two-sided | bi | subidempotent-bi | subsemigroup");
  auto* principal_opt =
      ideals->add_option("--principal", ideals_principal,
                         "side (left|right) and element: --principal left 1");
  principal_opt->expected(2);
  kind_opt->excludes(principal_opt);

  // verify
  std::string verify_file;
  std::vector<std::string> verify_exhaustive_args;
  auto* verify = app.add_subcommand("verify", "run the law harness");
  verify->fallthrough();
  verify->add_option("file", verify_file, "structure file");
  verify
      ->add_option("--exhaustive", verify_exhaustive_args,
                   "kind (hyper|gamma), carrier size, gamma size: "
                   "--exhaustive hyper 2 or --exhaustive gamma 2 2")
      ->expected(2, 3);

  // enumerate
  std::string enum_kind, enum_filter = "none", enum_dedup = "raw", enum_catalog;
  int enum_n = 0, enum_k = 1;
  auto* enumerate = app.add_subcommand("enumerate", "walk a table space");
  enumerate->fallthrough();
  enumerate->add_option("--kind", enum_kind)
      ->required()
      ->check(CLI::IsMember({"hyper", "gamma"}));
  enumerate->add_option("--n", enum_n, "carrier size")->required();
  enumerate->add_option("--k", enum_k, "gamma size (gamma only)");
  enumerate->add_option("--filter", enum_filter)
      ->check(CLI::IsMember({"none", "semigroup"}));
  enumerate->add_option("--dedup", enum_dedup)
      ->check(CLI::IsMember({"raw", "iso"}));
  enumerate->add_option("--catalog", enum_catalog,
                        "write emitted structures and an index here");

  // search-problem
  int sp_from = 0, sp_to = 0;
  bool sp_dedup = false;
  auto* search = app.add_subcommand(
      "search-problem",
      "find hypersemigroups with no proper bi-ideal that are not hypergroups");
  search->fallthrough();
  search->add_option("--n-from", sp_from, "first carrier size")->required();
  search->add_option("--n-to", sp_to, "last carrier size")->required();
  search->add_flag("--dedup", sp_dedup, "one witness per isomorphism class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return run_check(check_file, check_property, global);
    if (*ideals) {
      if (ideals_kind.empty() && ideals_principal.empty()) {
        std::cerr << "ideals needs --kind or --principal\n";
        return kExitUsage;
      }
      return run_ideals(ideals_file, ideals_kind, ideals_principal);
    }
    if (*verify) {
      const bool has_file = !verify_file.empty();
      const bool has_sweep = !verify_exhaustive_args.empty();
      if (has_file == has_sweep) {
        std::cerr << "verify needs a structure file or --exhaustive\n";
        return kExitUsage;
      }
      return has_file ? run_verify_file(verify_file, global)
                      : run_verify_exhaustive(verify_exhaustive_args, global);
    }
    if (*enumerate) {
      return run_enumerate(enum_kind, enum_n, enum_k, enum_filter, enum_dedup,
                           enum_catalog, global);
    }
    if (*search) return run_search_problem(sp_from, sp_to, sp_dedup, global);
    std::cerr << "no command\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
