#include "smallhyper/laws.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "smallhyper/ideals.hpp"
#include "smallhyper/structure_io.hpp"
#include "smallhyper/subset_algebra.hpp"
#include "smallhyper/version.hpp"

namespace smallhyper {

namespace {

using nlohmann::json;

constexpr int kSubsetSamples = 16;
constexpr std::size_t kFailureSampleCap = 10;

// Deterministic generator for the sampled subset checks. Hand-rolled so
// reports do not depend on the standard library's distribution internals.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  Subset nonempty_subset(Carrier c) {
    return Subset::from_mask(c, 1 + below(c.full_mask()));
  }

  /// Nonempty random subset of a nonempty set.
  Subset nonempty_subset_of(const Subset& b) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const mask_t m = next() & b.mask();
      if (m != 0) return Subset::from_mask(b.carrier(), m);
    }
    return b;
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t fp) {
  SplitMix64 rng{seed ^ (fp + 0x9e3779b97f4a7c15ULL)};
  return rng.next();
}

json subset_json(const Subset& s) { return json(s.elements()); }

json subsets_json(const std::vector<Subset>& list) {
  json out = json::array();
  for (const Subset& s : list) out.push_back(subset_json(s));
  return out;
}

struct BodyResult {
  LawOutcome outcome = LawOutcome::Pass;
  std::string detail;
  json counterexample;
};

BodyResult fail(std::string detail, json counterexample) {
  return BodyResult{LawOutcome::Fail, std::move(detail),
                    std::move(counterexample)};
}

BodyResult pass() { return BodyResult{}; }

// ---------------------------------------------------------------------
// Shared bodies: most gamma-side laws and their hyper-side twins are the
// same statement over a SubsetAlgebra, so each pair runs through one
// function.
// ---------------------------------------------------------------------

/// P2.1 / P3.4: the three regularity forms agree. The definitional form is
/// supplied by the caller (it reads the table directly).
BodyResult regularity_forms_agree(const SubsetAlgebra& alg,
                                  bool definitional_regular) {
  const bool element_form = is_regular(alg);
  const bool subset_form = is_regular_subset_form(alg);
  if (definitional_regular == element_form && element_form == subset_form) {
    return pass();
  }
  return fail("regularity deciders disagree",
              json{{"definitional_form", definitional_regular},
                   {"element_form", element_form},
                   {"subset_form", subset_form}});
}

Subset first_proper_ideal(const SubsetAlgebra& alg, bool left) {
  for (const Subset a : enumerate_nonempty_subsets(alg.carrier())) {
    if (a.is_full()) continue;
    if (left ? is_left_ideal(alg, a) : is_right_ideal(alg, a)) return a;
  }
  return alg.full();
}

/// P2.2 / P3.5: criterion ⇒ left simple on any table; the converse on
/// associative ones.
BodyResult left_simple_criterion_law(const SubsetAlgebra& alg) {
  const bool criterion = left_simple_criterion(alg);
  const bool simple = is_left_simple(alg);
  if (criterion && !simple) {
    return fail("criterion holds but a proper left ideal exists",
                json{{"direction", "forward"},
                     {"proper_left_ideal",
                      subset_json(first_proper_ideal(alg, true))}});
  }
  if (alg.associative && simple && !criterion) {
    return fail("left simple but the criterion fails",
                json{{"direction", "converse"}});
  }
  return pass();
}

/// C2.3 / C3.6: criterion ⟺ simplicity, on both sides.
BodyResult simple_criterion_corollary(const SubsetAlgebra& alg) {
  const bool lc = left_simple_criterion(alg);
  const bool ls = is_left_simple(alg);
  const bool rc = right_simple_criterion(alg);
  const bool rs = is_right_simple(alg);
  if (lc != ls || rc != rs) {
    return fail("simplicity criterion disagrees with ideal enumeration",
                json{{"left_criterion", lc},
                     {"left_simple", ls},
                     {"right_criterion", rc},
                     {"right_simple", rs}});
  }
  return pass();
}

/// P2.4 / P3.7: left and right simple ⇒ regular.
BodyResult simple_implies_regular(const SubsetAlgebra& alg) {
  if (!is_left_simple(alg) || !is_right_simple(alg)) return pass();
  if (is_regular(alg)) return pass();
  for (int a = 0; a < alg.carrier_n; ++a) {
    const Subset single = Subset::singleton(alg.carrier(), a);
    if (!alg.product(alg.product(single, alg.full()), single).contains(a)) {
      return fail("left and right simple but not regular",
                  json{{"element", a}});
    }
  }
  return fail("left and right simple but not regular", json::object());
}

/// P2.5 / P3.8: in a regular algebra the bi-ideals are subidempotent.
BodyResult regular_bi_ideals_subidempotent(const SubsetAlgebra& alg) {
  if (!is_regular(alg)) return pass();
  const auto bi = enumerate_ideals(alg, IdealKind::BiIdeal);
  const auto sub = enumerate_ideals(alg, IdealKind::SubidempotentBiIdeal);
  if (bi == sub) return pass();
  for (const Subset& b : bi) {
    if (!is_subsemigroup(alg, b)) {
      return fail("bi-ideal of a regular algebra is not a subsemigroup",
                  json{{"bi_ideal", subset_json(b)},
                       {"square", subset_json(alg.product(b, b))}});
    }
  }
  return fail("bi-ideal lists differ", json{{"bi_ideals", subsets_json(bi)},
                                            {"subidempotent", subsets_json(sub)}});
}

/// P2.6 / P3.9: one-sided ideals are bi-ideals.
BodyResult one_sided_ideals_are_bi(const SubsetAlgebra& alg) {
  for (const Subset a : enumerate_nonempty_subsets(alg.carrier())) {
    const bool left = is_left_ideal(alg, a);
    const bool right = is_right_ideal(alg, a);
    if ((left || right) && !is_bi_ideal(alg, a)) {
      return fail("one-sided ideal is not a bi-ideal",
                  json{{"ideal", subset_json(a)},
                       {"side", left ? "left" : "right"}});
    }
  }
  return pass();
}

/// P2.7 / P3.10: the product distributes over union, sampled.
BodyResult product_distributes_over_union(const SubsetAlgebra& alg,
                                          SplitMix64& rng) {
  const Carrier c = alg.carrier();
  for (int i = 0; i < kSubsetSamples; ++i) {
    const Subset a = rng.nonempty_subset(c);
    const Subset b = rng.nonempty_subset(c);
    const Subset d = rng.nonempty_subset(c);
    const Subset left_lhs = alg.product(a | b, d);
    const Subset left_rhs = alg.product(a, d) | alg.product(b, d);
    if (left_lhs != left_rhs) {
      return fail("(A∪B)·C != A·C ∪ B·C",
                  json{{"A", subset_json(a)},
                       {"B", subset_json(b)},
                       {"C", subset_json(d)},
                       {"lhs", subset_json(left_lhs)},
                       {"rhs", subset_json(left_rhs)}});
    }
    const Subset right_lhs = alg.product(d, a | b);
    const Subset right_rhs = alg.product(d, a) | alg.product(d, b);
    if (right_lhs != right_rhs) {
      return fail("C·(A∪B) != C·A ∪ C·B",
                  json{{"A", subset_json(a)},
                       {"B", subset_json(b)},
                       {"C", subset_json(d)},
                       {"lhs", subset_json(right_lhs)},
                       {"rhs", subset_json(right_rhs)}});
    }
  }
  return pass();
}

/// P2.8 / P3.11: the principal formulas give the least one-sided ideals.
BodyResult principal_ideals_minimal(const SubsetAlgebra& alg) {
  const auto lefts = enumerate_ideals(alg, IdealKind::LeftIdeal);
  const auto rights = enumerate_ideals(alg, IdealKind::RightIdeal);
  for (int b = 0; b < alg.carrier_n; ++b) {
    for (bool left : {true, false}) {
      const Subset principal = left ? principal_left_ideal(alg, b)
                                    : principal_right_ideal(alg, b);
      const auto& ideals = left ? lefts : rights;
      Subset meet = alg.full();
      for (const Subset& ideal : ideals) {
        if (ideal.contains(b)) meet &= ideal;
      }
      const bool is_ideal = left ? is_left_ideal(alg, principal)
                                 : is_right_ideal(alg, principal);
      if (!principal.contains(b) || !is_ideal || principal != meet) {
        return fail("principal ideal formula is not the least ideal",
                    json{{"element", b},
                         {"side", left ? "left" : "right"},
                         {"formula", subset_json(principal)},
                         {"least_ideal", subset_json(meet)},
                         {"is_ideal", is_ideal}});
      }
    }
  }
  return pass();
}

/// T2.9 / T3.12: left and right simple ⟺ no proper bi-ideal.
BodyResult simple_iff_no_proper_bi_ideal(const SubsetAlgebra& alg) {
  const bool simple = is_left_simple(alg) && is_right_simple(alg);
  const auto bi = enumerate_ideals(alg, IdealKind::BiIdeal);
  const bool no_proper = bi.size() == 1 && bi.front().is_full();
  if (simple == no_proper) return pass();
  return fail("simplicity and bi-ideal absence disagree",
              json{{"left_and_right_simple", simple},
                   {"bi_ideals", subsets_json(bi)}});
}

// ---------------------------------------------------------------------
// Kind-specific bodies
// ---------------------------------------------------------------------

/// P3.1: membership in A*B is membership in some a∘b, and each cell over
/// A×B sits inside A*B. Sampled A,B.
BodyResult star_membership_law(const HyperTable& t, SplitMix64& rng) {
  const Carrier c = t.carrier();
  for (int i = 0; i < kSubsetSamples; ++i) {
    const Subset a = rng.nonempty_subset(c);
    const Subset b = rng.nonempty_subset(c);
    const Subset prod = star(t, a, b);
    for (int x = 0; x < c.size(); ++x) {
      bool in_some_cell = false;
      for (int p = 0; p < c.size() && !in_some_cell; ++p) {
        if (!a.contains(p)) continue;
        for (int q = 0; q < c.size() && !in_some_cell; ++q) {
          if (!b.contains(q)) continue;
          in_some_cell = (t.cell_mask(p, q) >> x) & 1;
        }
      }
      if (in_some_cell != prod.contains(x)) {
        return fail("membership in A*B disagrees with the cell scan",
                    json{{"A", subset_json(a)},
                         {"B", subset_json(b)},
                         {"x", x},
                         {"in_star", prod.contains(x)}});
      }
    }
    for (int p = 0; p < c.size(); ++p) {
      if (!a.contains(p)) continue;
      for (int q = 0; q < c.size(); ++q) {
        if (!b.contains(q)) continue;
        if (!t.cell(p, q).is_subset_of(prod)) {
          return fail("a∘b is not contained in A*B",
                      json{{"A", subset_json(a)},
                           {"B", subset_json(b)},
                           {"a", p},
                           {"b", q}});
        }
      }
    }
  }
  return pass();
}

/// P3.2: monotonicity of * in both arguments. Sampled.
BodyResult star_monotone_law(const HyperTable& t, SplitMix64& rng) {
  const Carrier c = t.carrier();
  for (int i = 0; i < kSubsetSamples; ++i) {
    const Subset b = rng.nonempty_subset(c);
    const Subset a = rng.nonempty_subset_of(b);
    const Subset d = rng.nonempty_subset(c);
    if (!star(t, a, d).is_subset_of(star(t, b, d)) ||
        !star(t, d, a).is_subset_of(star(t, d, b))) {
      return fail("A ⊆ B does not propagate through *",
                  json{{"A", subset_json(a)},
                       {"B", subset_json(b)},
                       {"C", subset_json(d)}});
    }
  }
  return pass();
}

/// Definitional regularity of a hypersemigroup: some x puts a in
/// (a∘x)*{a}.
bool hyper_definitional_regular(const HyperTable& t) {
  for (int a = 0; a < t.size(); ++a) {
    const Subset single = Subset::singleton(t.carrier(), a);
    bool found = false;
    for (int x = 0; x < t.size() && !found; ++x) {
      found = star(t, t.cell(a, x), single).contains(a);
    }
    if (!found) return false;
  }
  return true;
}

/// Definitional regularity of a Γ-semigroup: some x, γ, μ give
/// a = (aγx)μa.
bool gamma_definitional_regular(const GammaTable& t) {
  const int n = t.size();
  const int k = t.gamma_size();
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      for (int g = 0; g < k && !found; ++g) {
        for (int m = 0; m < k && !found; ++m) {
          found = t.cell_unchecked(t.cell_unchecked(a, g, x), m, a) == a;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string assoc_failure_note(const std::array<int, 3>& triple) {
  std::ostringstream os;
  os << "not associative; identity fails at (" << triple[0] << ","
     << triple[1] << "," << triple[2] << ")";
  return os.str();
}

std::string assoc_failure_note(const std::array<int, 5>& tuple) {
  std::ostringstream os;
  os << "not associative; identity fails at (" << tuple[0] << "," << tuple[1]
     << "," << tuple[2] << "," << tuple[3] << "," << tuple[4] << ")";
  return os.str();
}

struct HyperCtx {
  const HyperTable& table;
  SubsetAlgebra algebra;
  AssociativityCheck assoc;
  std::uint64_t sample_seed = 0;
  std::optional<HypergroupCheck> hypergroup;  // filled on first use

  const HypergroupCheck& hypergroup_check() {
    if (!hypergroup) hypergroup = is_hypergroup(table);
    return *hypergroup;
  }
};

HyperCtx make_hyper_ctx(const HyperTable& t, const AssociativityCheck& assoc,
                        std::uint64_t seed) {
  return HyperCtx{t, subset_algebra(t, assoc.ok), assoc,
                  mix_seed(seed, fingerprint(t)), std::nullopt};
}

struct GammaCtx {
  const GammaTable& table;
  SubsetAlgebra algebra;
  GammaAssociativityCheck assoc;
  std::uint64_t sample_seed = 0;
};

GammaCtx make_gamma_ctx(const GammaTable& t,
                        const GammaAssociativityCheck& assoc,
                        std::uint64_t seed) {
  return GammaCtx{t, subset_algebra(t, assoc.ok), assoc,
                  mix_seed(seed, fingerprint(t))};
}

BodyResult run_hyper_law(const LawCheckInfo& info, HyperCtx& ctx) {
  if (info.level != LawCheckInfo::Level::Groupoid && !ctx.assoc.ok) {
    return BodyResult{LawOutcome::NotApplicable,
                      assoc_failure_note(ctx.assoc.triple), json()};
  }
  SplitMix64 rng{ctx.sample_seed};
  if (info.id == "P3.1") return star_membership_law(ctx.table, rng);
  if (info.id == "P3.2") return star_monotone_law(ctx.table, rng);
  if (info.id == "P3.4") {
    return regularity_forms_agree(ctx.algebra,
                                  hyper_definitional_regular(ctx.table));
  }
  if (info.id == "P3.5") return left_simple_criterion_law(ctx.algebra);
  if (info.id == "C3.6") return simple_criterion_corollary(ctx.algebra);
  if (info.id == "P3.7") return simple_implies_regular(ctx.algebra);
  if (info.id == "P3.8") return regular_bi_ideals_subidempotent(ctx.algebra);
  if (info.id == "P3.9") return one_sided_ideals_are_bi(ctx.algebra);
  if (info.id == "P3.10") {
    return product_distributes_over_union(ctx.algebra, rng);
  }
  if (info.id == "P3.11") return principal_ideals_minimal(ctx.algebra);
  if (info.id == "T3.12") return simple_iff_no_proper_bi_ideal(ctx.algebra);
  if (info.id == "T3.13") {
    const HypergroupCheck& hg = ctx.hypergroup_check();
    if (!hg.ok) {
      std::string reason =
          hg.failure == HypergroupCheck::Failure::NoIdentity
              ? "no identity element"
              : "element " + std::to_string(hg.element_without_inverse) +
                    " has no inverse";
      return BodyResult{LawOutcome::NotApplicable,
                        "not a hypergroup (" + reason + ")", json()};
    }
    const auto bi = enumerate_ideals(ctx.algebra, IdealKind::BiIdeal);
    if (bi.size() == 1 && bi.front().is_full()) return pass();
    return fail("hypergroup with a proper bi-ideal",
                json{{"bi_ideals", subsets_json(bi)}});
  }
  throw std::logic_error("unknown hyper law id " + info.id);
}

BodyResult run_gamma_law(const LawCheckInfo& info, GammaCtx& ctx) {
  if (info.level != LawCheckInfo::Level::Groupoid && !ctx.assoc.ok) {
    return BodyResult{LawOutcome::NotApplicable,
                      assoc_failure_note(ctx.assoc.tuple), json()};
  }
  SplitMix64 rng{ctx.sample_seed};
  if (info.id == "P2.1") {
    return regularity_forms_agree(ctx.algebra,
                                  gamma_definitional_regular(ctx.table));
  }
  if (info.id == "P2.2") return left_simple_criterion_law(ctx.algebra);
  if (info.id == "C2.3") return simple_criterion_corollary(ctx.algebra);
  if (info.id == "P2.4") return simple_implies_regular(ctx.algebra);
  if (info.id == "P2.5") return regular_bi_ideals_subidempotent(ctx.algebra);
  if (info.id == "P2.6") return one_sided_ideals_are_bi(ctx.algebra);
  if (info.id == "P2.7") {
    return product_distributes_over_union(ctx.algebra, rng);
  }
  if (info.id == "P2.8") return principal_ideals_minimal(ctx.algebra);
  if (info.id == "T2.9") return simple_iff_no_proper_bi_ideal(ctx.algebra);
  throw std::logic_error("unknown gamma law id " + info.id);
}

std::uint64_t now_us() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

LawResult timed_result(const LawCheckInfo& info,
                       const std::function<BodyResult()>& body) {
  const std::uint64_t t0 = now_us();
  BodyResult r = body();
  LawResult out;
  out.id = info.id;
  out.outcome = r.outcome;
  out.detail = std::move(r.detail);
  out.counterexample = std::move(r.counterexample);
  out.time_us = now_us() - t0;
  return out;
}

}  // namespace

std::string law_outcome_name(LawOutcome o) {
  switch (o) {
    case LawOutcome::Pass: return "pass";
    case LawOutcome::Fail: return "fail";
    case LawOutcome::NotApplicable: return "not-applicable";
  }
  return "?";
}

const std::vector<LawCheckInfo>& law_registry() {
  using Level = LawCheckInfo::Level;
  static const std::vector<LawCheckInfo> registry = {
      {"P2.1", StructureKind::Gamma, Level::Semigroup},
      {"P2.2", StructureKind::Gamma, Level::Groupoid},
      {"C2.3", StructureKind::Gamma, Level::Semigroup},
      {"P2.4", StructureKind::Gamma, Level::Semigroup},
      {"P2.5", StructureKind::Gamma, Level::Semigroup},
      {"P2.6", StructureKind::Gamma, Level::Semigroup},
      {"P2.7", StructureKind::Gamma, Level::Semigroup},
      {"P2.8", StructureKind::Gamma, Level::Semigroup},
      {"T2.9", StructureKind::Gamma, Level::Semigroup},
      {"P3.1", StructureKind::Hyper, Level::Groupoid},
      {"P3.2", StructureKind::Hyper, Level::Groupoid},
      {"P3.4", StructureKind::Hyper, Level::Semigroup},
      {"P3.5", StructureKind::Hyper, Level::Groupoid},
      {"C3.6", StructureKind::Hyper, Level::Semigroup},
      {"P3.7", StructureKind::Hyper, Level::Semigroup},
      {"P3.8", StructureKind::Hyper, Level::Semigroup},
      {"P3.9", StructureKind::Hyper, Level::Semigroup},
      {"P3.10", StructureKind::Hyper, Level::Groupoid},
      {"P3.11", StructureKind::Hyper, Level::Semigroup},
      {"T3.12", StructureKind::Hyper, Level::Semigroup},
      {"T3.13", StructureKind::Hyper, Level::Hypergroup},
  };
  return registry;
}

int LawReport::failures() const {
  int count = 0;
  for (const LawResult& r : results) {
    if (r.outcome == LawOutcome::Fail) ++count;
  }
  return count;
}

nlohmann::json LawReport::to_json() const {
  json checks = json::array();
  for (const LawResult& r : results) {
    json entry{{"id", r.id}, {"outcome", law_outcome_name(r.outcome)}};
    if (!r.detail.empty()) entry["detail"] = r.detail;
    if (r.outcome == LawOutcome::Fail) entry["counterexample"] = r.counterexample;
    entry["time_us"] = r.time_us;
    checks.push_back(std::move(entry));
  }
  json structure{{"kind", kind}, {"n", n}, {"digest", digest}};
  if (k > 0) structure["k"] = k;
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"structure", std::move(structure)},
              {"seed", seed},
              {"checks", std::move(checks)},
              {"failures", failures()}};
}

std::string LawReport::human_summary() const {
  std::ostringstream os;
  os << kind << " n=" << n;
  if (k > 0) os << " k=" << k;
  os << " digest=" << digest << "\n";
  for (const LawResult& r : results) {
    os << "  " << r.id << (r.id.size() < 5 ? "  " : " ")
       << law_outcome_name(r.outcome);
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
  }
  os << failures() << " failure(s)\n";
  return os.str();
}

LawReport verify_structure(const HyperTable& t, std::uint64_t seed) {
  LawReport report;
  report.kind = structure_kind_name(StructureKind::Hyper);
  report.n = t.size();
  report.k = 0;
  report.digest = digest_string(fingerprint(t));
  report.seed = seed;
  HyperCtx ctx = make_hyper_ctx(t, is_hypersemigroup(t), seed);
  for (const LawCheckInfo& info : law_registry()) {
    if (info.kind != StructureKind::Hyper) continue;
    report.results.push_back(
        timed_result(info, [&] { return run_hyper_law(info, ctx); }));
  }
  return report;
}

LawReport verify_structure(const GammaTable& t, std::uint64_t seed) {
  LawReport report;
  report.kind = structure_kind_name(StructureKind::Gamma);
  report.n = t.size();
  report.k = t.gamma_size();
  report.digest = digest_string(fingerprint(t));
  report.seed = seed;
  GammaCtx ctx = make_gamma_ctx(t, is_gamma_semigroup(t), seed);
  for (const LawCheckInfo& info : law_registry()) {
    if (info.kind != StructureKind::Gamma) continue;
    report.results.push_back(
        timed_result(info, [&] { return run_gamma_law(info, ctx); }));
  }
  return report;
}

LawReport verify_structure(const Structure& s, std::uint64_t seed) {
  if (const auto* h = std::get_if<HyperTable>(&s)) {
    return verify_structure(*h, seed);
  }
  return verify_structure(std::get<GammaTable>(s), seed);
}

LawResult check_t313(const HyperTable& t) {
  const LawCheckInfo info{"T3.13", StructureKind::Hyper,
                          LawCheckInfo::Level::Hypergroup};
  HyperCtx ctx = make_hyper_ctx(t, is_hypersemigroup(t), kDefaultSeed);
  return timed_result(info, [&] { return run_hyper_law(info, ctx); });
}

// ---------------------------------------------------------------------
// Exhaustive sweeps
// ---------------------------------------------------------------------

namespace {

struct WorkerState {
  std::uint64_t scanned = 0;
  std::uint64_t associative = 0;
  std::vector<SweepCheckStat> stats;  // indexed like the kind's registry slice
  std::uint64_t failure_count = 0;
  std::vector<SweepFailure> failures;  // capped
};

void record(WorkerState& state, std::size_t check_idx, const LawResult& result,
            std::uint64_t table_index, const Structure& structure) {
  SweepCheckStat& stat = state.stats[check_idx];
  switch (result.outcome) {
    case LawOutcome::Pass:
      ++stat.runs;
      break;
    case LawOutcome::Fail:
      ++stat.runs;
      ++stat.failures;
      ++state.failure_count;
      if (state.failures.size() < kFailureSampleCap) {
        state.failures.push_back(
            SweepFailure{table_index, serialize_structure(structure), result});
      }
      break;
    case LawOutcome::NotApplicable:
      ++stat.not_applicable;
      break;
  }
}

}  // namespace

nlohmann::json SweepReport::to_json() const {
  json check_list = json::array();
  for (const SweepCheckStat& s : checks) {
    check_list.push_back(json{{"id", s.id},
                              {"runs", s.runs},
                              {"failures", s.failures},
                              {"not_applicable", s.not_applicable}});
  }
  json failure_list = json::array();
  for (const SweepFailure& f : failures) {
    failure_list.push_back(json{{"table_index", f.table_index},
                                {"structure", json::parse(f.structure_json)},
                                {"id", f.result.id},
                                {"detail", f.result.detail},
                                {"counterexample", f.result.counterexample}});
  }
  json sweep{{"kind", structure_kind_name(kind)}, {"n", n}, {"space", space}};
  if (kind == StructureKind::Gamma) sweep["k"] = k;
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"sweep", std::move(sweep)},
              {"scanned", scanned},
              {"associative", associative},
              {"seed", seed},
              {"groupoid_checks_on_all", groupoid_checks_on_all},
              {"checks", std::move(check_list)},
              {"failure_count", failure_count},
              {"failures", std::move(failure_list)},
              {"elapsed_us", elapsed_us}};
}

std::string SweepReport::human_summary() const {
  std::ostringstream os;
  const bool hyper = kind == StructureKind::Hyper;
  os << structure_kind_name(kind) << " n=" << n;
  if (!hyper) os << " k=" << k;
  os << ": " << scanned << " scanned / " << associative
     << (hyper ? " hypersemigroups" : " gamma-semigroups") << " / "
     << failure_count << " failures\n";
  for (const SweepCheckStat& s : checks) {
    os << "  " << s.id << (s.id.size() < 5 ? "  " : " ") << s.runs << " runs, "
       << s.failures << " failures, " << s.not_applicable
       << " not applicable\n";
  }
  return os.str();
}

SweepReport verify_exhaustive(StructureKind kind, int n, int k,
                              const SweepOptions& options) {
  const bool hyper = kind == StructureKind::Hyper;
  const std::uint64_t space =
      hyper ? hyper_space_size(n) : gamma_space_size(n, k);
  if (space > options.budget) throw BudgetExceeded(space, options.budget);

  const bool check_all = options.checks_on_all_tables.value_or(
      space <= kGroupoidCheckSpaceCap);

  std::vector<LawCheckInfo> checks;
  for (const LawCheckInfo& info : law_registry()) {
    if (info.kind == kind) checks.push_back(info);
  }

  const std::uint64_t t0 = now_us();
  const int workers = static_cast<int>(std::min<std::uint64_t>(
      std::max(1, options.workers), std::max<std::uint64_t>(1, space)));
  std::vector<WorkerState> states(static_cast<std::size_t>(workers));
  for (WorkerState& s : states) {
    s.stats.resize(checks.size());
    for (std::size_t i = 0; i < checks.size(); ++i) s.stats[i].id = checks[i].id;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

  auto run_hyper_range = [&](WorkerState& state, std::uint64_t begin,
                             std::uint64_t end) {
    detail::scan_hyper_raw(n, begin, end, [&](std::uint64_t index,
                                              const mask_t* cells) {
      ++state.scanned;
      const auto violation = detail::hyper_assoc_violation(n, cells);
      if (!violation) ++state.associative;
      if (violation && !check_all) return;
      const HyperTable t = detail::hyper_from_masks(n, cells);
      AssociativityCheck assoc;
      if (violation) {
        assoc.ok = false;
        assoc.triple = *violation;
      }
      HyperCtx ctx = make_hyper_ctx(t, assoc, options.seed);
      const Structure structure{t};
      for (std::size_t i = 0; i < checks.size(); ++i) {
        record(state, i, timed_result(checks[i],
                                      [&] { return run_hyper_law(checks[i], ctx); }),
               index, structure);
      }
    });
  };

  auto run_gamma_range = [&](WorkerState& state, std::uint64_t begin,
                             std::uint64_t end) {
    detail::scan_gamma_raw(n, k, begin, end, [&](std::uint64_t index,
                                                 const std::uint8_t* cells) {
      ++state.scanned;
      const auto violation = detail::gamma_assoc_violation(n, k, cells);
      if (!violation) ++state.associative;
      if (violation && !check_all) return;
      const GammaTable t = detail::gamma_from_cells(n, k, cells);
      GammaAssociativityCheck assoc;
      if (violation) {
        assoc.ok = false;
        assoc.tuple = *violation;
      }
      GammaCtx ctx = make_gamma_ctx(t, assoc, options.seed);
      const Structure structure{t};
      for (std::size_t i = 0; i < checks.size(); ++i) {
        record(state, i, timed_result(checks[i],
                                      [&] { return run_gamma_law(checks[i], ctx); }),
               index, structure);
      }
    });
  };

  auto run_range = [&](int w, std::uint64_t begin, std::uint64_t end) {
    try {
      if (hyper) {
        run_hyper_range(states[static_cast<std::size_t>(w)], begin, end);
      } else {
        run_gamma_range(states[static_cast<std::size_t>(w)], begin, end);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_range(0, 0, space);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = space / workers * w;
      const std::uint64_t end =
          w + 1 == workers ? space : space / workers * (w + 1);
      threads.emplace_back(run_range, w, begin, end);
    }
    for (auto& th : threads) th.join();
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SweepReport report;
  report.kind = kind;
  report.n = n;
  report.k = hyper ? 0 : k;
  report.space = space;
  report.seed = options.seed;
  report.groupoid_checks_on_all = check_all;
  report.checks.resize(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    report.checks[i].id = checks[i].id;
  }
  for (const WorkerState& state : states) {
    report.scanned += state.scanned;
    report.associative += state.associative;
    report.failure_count += state.failure_count;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      report.checks[i].runs += state.stats[i].runs;
      report.checks[i].failures += state.stats[i].failures;
      report.checks[i].not_applicable += state.stats[i].not_applicable;
    }
    for (const SweepFailure& f : state.failures) report.failures.push_back(f);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) {
              return std::tie(a.table_index, a.result.id) <
                     std::tie(b.table_index, b.result.id);
            });
  if (report.failures.size() > kFailureSampleCap) {
    report.failures.resize(kFailureSampleCap);
  }
  report.elapsed_us = now_us() - t0;
  return report;
}

}  // namespace smallhyper
