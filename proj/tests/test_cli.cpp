#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "skewlab/io.hpp"

using namespace skewlab;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SKEWLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(SKEWLAB_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("validate: exit 0 on a valid instance, 2 on axiom violations") {
  RunResult ok = run_cli("validate " + fixture("s2.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out.find("ok") != std::string::npos);

  RunResult broken = run_cli("validate " + fixture("s2-broken.json"));
  CHECK(broken.status == 2);
  CHECK(broken.out.find("bijection") != std::string::npos);

  RunResult json = run_cli("validate --json " + fixture("s2-broken.json"));
  CHECK(json.status == 2);
  ojson report = ojson::parse(json.out);
  CHECK_FALSE(report.at("ok").get<bool>());
  CHECK_FALSE(report.at("violations").empty());
}

TEST_CASE("validate: exit 3 on malformed input") {
  CHECK(run_cli("validate " + fixture("bad-key.json")).status == 3);
  CHECK(run_cli("validate " + fixture("not-json.json")).status == 3);
  CHECK(run_cli("validate /no/such/file.json").status == 3);
}

TEST_CASE("simplicity: exit separates simple from non-simple") {
  RunResult simple = run_cli("simplicity " + fixture("s2.json"));
  CHECK(simple.status == 0);
  CHECK(simple.out.find("verdict: simple") != std::string::npos);

  RunResult blocked = run_cli("simplicity " + fixture("identity-on-a.json"));
  CHECK(blocked.status == 1);
  CHECK(blocked.out.find("verdict: not simple") != std::string::npos);

  RunResult spect = run_cli("simplicity " + fixture("swap-with-spectator.json"));
  CHECK(spect.status == 1);
}

TEST_CASE("simplicity --json emits the pinned report schema") {
  RunResult r = run_cli("simplicity --json --field gf3 " + fixture("s2.json"));
  CHECK(r.status == 0);
  ojson j = ojson::parse(r.out);
  CHECK(j.at("field") == ojson{{"type", "gfp"}, {"p", 3}});
  CHECK(j.at("oracle") == "simple");
  CHECK(j.at("theorem2") == ojson{{"minimal", true}, {"free", true}});
  CHECK(j.at("theorem1").at("g_simple") == true);
  CHECK(j.at("simple") == true);
  CHECK(j.at("agree") == true);
  CHECK(instance_from_json(j.at("instance")) ==
        instance_from_json(load_json_file(fixture("s2.json"))));
}

TEST_CASE("simplicity: guard violations exit 4") {
  CHECK(run_cli("simplicity --max-dim 2 " + fixture("s2.json")).status == 4);
  // the oracle cannot enumerate the rationals; asking for it is a guard stop
  CHECK(run_cli("simplicity --field rational --method oracle " + fixture("s2.json")).status == 4);
  // ...but the characterizations run fine over the rationals
  CHECK(run_cli("simplicity --field rational --method theorems " + fixture("s2.json")).status == 0);
}

TEST_CASE("check --json reports the derived facts") {
  RunResult r = run_cli("check --json " + fixture("swap-with-spectator.json"));
  CHECK(r.status == 0);
  ojson j = ojson::parse(r.out);
  CHECK(j.at("valid") == true);
  CHECK(j.at("ring_dim") == 5);
  CHECK(j.at("minimal") == false);
  CHECK(j.at("free") == true);
  CHECK(j.at("topologically_free") == true);
  CHECK(j.at("g_simple") == false);
  CHECK(j.at("orbits").size() == 2);

  // on a finite discrete set a fixed point also kills topological freeness
  ojson fixed = ojson::parse(run_cli("check --json " + fixture("identity-on-a.json")).out);
  CHECK(fixed.at("free") == false);
  CHECK(fixed.at("topologically_free") == false);
}

TEST_CASE("example shift emits a loadable instance") {
  RunResult r = run_cli("example shift --n 3");
  CHECK(r.status == 0);
  PartialAction action = instance_from_json(ojson::parse(r.out));
  CHECK(action.size() == 3);
  CHECK(action.ring_dim() == 9);
  CHECK(validate_action(action).ok());
  CHECK(run_cli("example nope").status == 3);
}

TEST_CASE("gen emits valid random instances") {
  for (int seed : {1, 2, 3}) {
    RunResult r = run_cli("gen --seed " + std::to_string(seed));
    CHECK(r.status == 0);
    PartialAction action = instance_from_json(ojson::parse(r.out));
    CHECK(validate_action(action).ok());
  }
}

TEST_CASE("suite runs a seeded corpus and reports a summary") {
  RunResult r = run_cli("suite --random 3 --seed 1 --json");
  CHECK(r.status == 0);
  ojson j = ojson::parse(r.out);
  CHECK(j.at("mode") == "random");
  CHECK(j.at("seed") == 1);
  CHECK(j.at("count") == 3);
  CHECK(j.at("instances").size() == 3);
  CHECK(j.at("summary").at("disagreements") == 0);
  CHECK(j.at("summary").at("total").get<int>() >= 3);
}

TEST_CASE("suite tallies not-simple outcomes by obstruction") {
  RunResult r = run_cli("suite --exhaustive --fields gf2 --method both --json");
  CHECK(r.status == 0);
  ojson j = ojson::parse(r.out);
  const ojson& tally = j.at("summary").at("by_obstruction");
  // recount from the per-instance results the summary claims to condense
  int not_minimal = 0, not_free = 0, not_g_simple = 0, bad_corner = 0;
  for (const ojson& inst : j.at("instances")) {
    for (const ojson& outcome : inst.at("results")) {
      if (outcome.at("theorem2").is_null()) continue;
      if (outcome.at("theorem2").at("minimal") == false) ++not_minimal;
      if (outcome.at("theorem2").at("free") == false) ++not_free;
      if (outcome.at("theorem1").at("g_simple") == false) ++not_g_simple;
      if (!outcome.at("theorem1").at("non_field_units").empty()) ++bad_corner;
    }
  }
  CHECK(tally.at("not_minimal") == not_minimal);
  CHECK(tally.at("not_free") == not_free);
  CHECK(tally.at("not_g_simple") == not_g_simple);
  CHECK(tally.at("corner_center_not_field") == bad_corner);
  // the exhaustive corpus certainly contains non-minimal and non-free actions
  CHECK(not_minimal > 0);
  CHECK(not_free > 0);
}

TEST_CASE("suite output is byte-identical across runs") {
  const std::string args = "suite --random 4 --seed 9 --fields gf2,gf3 --json";
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}

TEST_CASE("suite requires exactly one corpus mode") {
  CHECK(run_cli("suite").status == 3);
  CHECK(run_cli("suite --exhaustive --random 2").status == 3);
}

TEST_CASE("argument errors land on the malformed-input exit code") {
  CHECK(run_cli("simplicity --max-dim 0 " + fixture("s2.json")).status == 3);
  CHECK(run_cli("simplicity --max-dim -4 " + fixture("s2.json")).status == 3);
  CHECK(run_cli("simplicity --bfs-depth 0 " + fixture("s2.json")).status == 3);
  CHECK(run_cli("simplicity --no-such-flag " + fixture("s2.json")).status == 3);
  CHECK(run_cli("frobnicate").status == 3);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "skewlab-cli-out.json").string();
  std::filesystem::remove(path);
  RunResult r = run_cli("simplicity --json --out " + path + " " + fixture("s2.json"));
  CHECK(r.status == 0);
  CHECK(r.out.empty()); // the report went to the file instead
  ojson j = load_json_file(path);
  CHECK(j.at("simple") == true);
  std::filesystem::remove(path);
}

TEST_CASE("--version prints something") {
  RunResult r = run_cli("--version");
  CHECK(r.status == 0);
  CHECK_FALSE(r.out.empty());
}

