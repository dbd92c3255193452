#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "smallhyper/structure_io.hpp"
#include "support/cli_runner.hpp"
#include "support/fixtures.hpp"

using clirun::run_cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct FixtureDir {
  fs::path dir;
  fs::path f2, c2, r2, lz2, truncated, nonassoc;

  FixtureDir() : dir(clirun::fresh_temp_dir("fixtures")) {
    using namespace smallhyper;
    f2 = dir / "F2.json";
    write_structure_file(f2, Structure{fixtures::f2()});
    c2 = dir / "C2.json";
    write_structure_file(c2, Structure{fixtures::c2()});
    r2 = dir / "R2.json";
    write_structure_file(r2, Structure{fixtures::r2()});
    lz2 = dir / "LZ2.json";
    write_structure_file(lz2, Structure{fixtures::lz2()});
    truncated = dir / "truncated.json";
    std::ofstream(truncated) << "{\"kind\": \"hypergroupoid\", \"n\": 2";
    nonassoc = dir / "nonassoc.json";
    // 0∘0={1} and everything else {0}: (0∘0)∘0 = {0}, 0∘(0∘0) = {1}... pick a
    // table checked non-associative below
    std::ofstream(nonassoc)
        << R"({"kind":"hypergroupoid","n":2,"table":[[[1],[0]],[[0],[0]]]})";
  }

  ~FixtureDir() { fs::remove_all(dir); }
};

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("time_us");
    j.erase("elapsed_us");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

}  // namespace

TEST_CASE("check: exit codes follow the contract") {
  const FixtureDir fx;
  CHECK(run_cli({"check", fx.f2.string(), "--property", "regular"}).exit_code == 0);
  CHECK(run_cli({"check", fx.c2.string(), "--property", "regular"}).exit_code == 1);
  CHECK(run_cli({"check", fx.truncated.string(), "--property", "regular"}).exit_code == 2);
  CHECK(run_cli({"check", fx.f2.string(), "--property", "no-such"}).exit_code == 2);
  CHECK(run_cli({"check", (fx.dir / "missing.json").string(), "--property",
                 "regular"}).exit_code == 2);
  // property/kind mismatch is a usage error
  CHECK(run_cli({"check", fx.lz2.string(), "--property", "hypersemigroup"}).exit_code == 2);
  CHECK(run_cli({"check", fx.f2.string(), "--property", "gamma-semigroup"}).exit_code == 2);
}

TEST_CASE("check: property verdicts") {
  const FixtureDir fx;
  CHECK(run_cli({"check", fx.f2.string(), "--property", "hypersemigroup"}).exit_code == 0);
  CHECK(run_cli({"check", fx.nonassoc.string(), "--property", "hypersemigroup"}).exit_code == 1);
  CHECK(run_cli({"check", fx.f2.string(), "--property", "hypergroup"}).exit_code == 1);
  CHECK(run_cli({"check", fx.f2.string(), "--property", "no-proper-bi-ideals"}).exit_code == 0);
  CHECK(run_cli({"check", fx.r2.string(), "--property", "no-proper-bi-ideals"}).exit_code == 1);
  CHECK(run_cli({"check", fx.lz2.string(), "--property", "gamma-semigroup"}).exit_code == 0);
  CHECK(run_cli({"check", fx.lz2.string(), "--property", "left-simple"}).exit_code == 0);
  CHECK(run_cli({"check", fx.lz2.string(), "--property", "right-simple"}).exit_code == 1);
  const auto verdict = run_cli({"check", fx.c2.string(), "--property", "regular"});
  CHECK(verdict.out.find("fails") != std::string::npos);
}

TEST_CASE("ideals: listings and principal ideals") {
  const FixtureDir fx;
  const auto bi = run_cli({"ideals", fx.r2.string(), "--kind", "bi"});
  CHECK(bi.exit_code == 0);
  CHECK(bi.out == "[0]\n[1]\n[0,1]\n");

  const auto left = run_cli({"ideals", fx.f2.string(), "--kind", "left"});
  CHECK(left.exit_code == 0);
  CHECK(left.out == "[0,1]\n");

  const auto principal =
      run_cli({"ideals", fx.c2.string(), "--principal", "left", "1"});
  CHECK(principal.exit_code == 0);
  CHECK(principal.out == "[0,1]\n");

  // both or neither selector is a usage error
  CHECK(run_cli({"ideals", fx.c2.string()}).exit_code == 2);
  CHECK(run_cli({"ideals", fx.c2.string(), "--kind", "bi", "--principal",
                 "left", "1"}).exit_code == 2);
  CHECK(run_cli({"ideals", fx.c2.string(), "--principal", "left", "7"}).exit_code == 2);
}

TEST_CASE("ideals: bi-ideal kinds on a non-associative table exit 1 with the triple") {
  const FixtureDir fx;
  const auto result = run_cli({"ideals", fx.nonassoc.string(), "--kind", "bi"});
  CHECK(result.exit_code == 1);
  CHECK(result.out.find("(") != std::string::npos);  // the failing triple
  // one-sided kinds still work, no associativity needed
  CHECK(run_cli({"ideals", fx.nonassoc.string(), "--kind", "left"}).exit_code == 0);
}

TEST_CASE("verify: single structure") {
  const FixtureDir fx;
  const auto result = run_cli({"verify", fx.f2.string()});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("0 failure(s)") != std::string::npos);
}

TEST_CASE("verify: exhaustive sweep output and exit codes") {
  const FixtureDir fx;
  const auto sweep = run_cli({"verify", "--exhaustive", "hyper", "2"});
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.out.find("81 scanned") != std::string::npos);
  CHECK(sweep.out.find("30 hypersemigroups") != std::string::npos);
  CHECK(sweep.out.find("0 failures") != std::string::npos);

  const auto budget = run_cli({"verify", "--exhaustive", "hyper", "9"});
  CHECK(budget.exit_code == 2);
  CHECK(budget.err.find("exceeds the budget") != std::string::npos);

  // gamma sweeps need k
  CHECK(run_cli({"verify", "--exhaustive", "gamma", "2", "2"}).exit_code == 0);
}

TEST_CASE("verify: reports are byte-stable modulo timing") {
  const auto dir = clirun::fresh_temp_dir("reports");
  const auto r1 = dir / "r1.json";
  const auto r2 = dir / "r2.json";
  const auto r4 = dir / "r4.json";
  CHECK(run_cli({"verify", "--exhaustive", "hyper", "2", "--workers", "1",
                 "--output", r1.string()}).exit_code == 0);
  CHECK(run_cli({"verify", "--exhaustive", "hyper", "2", "--workers", "1",
                 "--output", r2.string()}).exit_code == 0);
  CHECK(run_cli({"verify", "--exhaustive", "hyper", "2", "--workers", "4",
                 "--output", r4.string()}).exit_code == 0);
  const json a = strip_timing(json::parse(clirun::slurp(r1)));
  const json b = strip_timing(json::parse(clirun::slurp(r2)));
  const json c = strip_timing(json::parse(clirun::slurp(r4)));
  CHECK(a.dump() == b.dump());
  CHECK(a.dump() == c.dump());
  fs::remove_all(dir);
}

TEST_CASE("enumerate: counts and catalog") {
  const auto dir = clirun::fresh_temp_dir("enum");
  const auto plain = run_cli({"enumerate", "--kind", "hyper", "--n", "2"});
  CHECK(plain.exit_code == 0);
  CHECK(plain.out.find("space: 81") != std::string::npos);
  CHECK(plain.out.find("emitted: 81") != std::string::npos);

  const auto filtered =
      run_cli({"enumerate", "--kind", "hyper", "--n", "2", "--filter",
               "semigroup", "--dedup", "iso", "--catalog",
               (dir / "cat").string()});
  CHECK(filtered.exit_code == 0);
  CHECK(filtered.out.find("emitted: 17") != std::string::npos);
  CHECK(fs::exists(dir / "cat" / "index.json"));

  CHECK(run_cli({"enumerate", "--kind", "hyper", "--n", "9"}).exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("search-problem: witnesses, exit codes, and re-validation") {
  const auto dir = clirun::fresh_temp_dir("search");

  const auto none = run_cli({"search-problem", "--n-from", "1", "--n-to", "1",
                             "--output", (dir / "none").string()});
  CHECK(none.exit_code == 1);
  CHECK(none.out.find("n=1: 0 witness(es)") != std::string::npos);

  const auto found = run_cli({"search-problem", "--n-from", "1", "--n-to", "2",
                              "--dedup", "--output", (dir / "cat").string()});
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("n=2: 7 witness(es)") != std::string::npos);

  // every witness file re-validates through check
  json index;
  std::ifstream(dir / "cat" / "index.json") >> index;
  REQUIRE(index.at("count").get<int>() == 7);
  bool saw_full_table = false;
  for (const auto& entry : index.at("entries")) {
    const auto path = dir / "cat" / entry.at("file").get<std::string>();
    CHECK(run_cli({"check", path.string(), "--property", "no-proper-bi-ideals"})
              .exit_code == 0);
    CHECK(run_cli({"check", path.string(), "--property", "hypergroup"})
              .exit_code == 1);
    CHECK(run_cli({"check", path.string(), "--property", "hypersemigroup"})
              .exit_code == 0);
    if (smallhyper::parse_structure(clirun::slurp(path)) ==
        smallhyper::Structure{fixtures::f2()}) {
      saw_full_table = true;
    }
  }
  CHECK(saw_full_table);

  // budget refusal before any size is searched
  const auto refused =
      run_cli({"search-problem", "--n-from", "3", "--n-to", "3",
               "--budget-override", "10", "--output", (dir / "x").string()});
  CHECK(refused.exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"check"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"verify"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
}
