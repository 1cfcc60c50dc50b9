// command-line front end: validate instances, inspect them, decide
// simplicity two independent ways, and run cross-validation suites
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewlab/corpus.hpp"
#include "skewlab/io.hpp"
#include "skewlab/suite.hpp"
#include "skewlab/version.hpp"

namespace {

using namespace skewlab;

// exit codes shared by the subcommands:
//   0 success (simplicity: simple), 1 not simple, 2 axiom violation or
//   verdict disagreement, 3 malformed input, 4 resource guard hit
constexpr int kExitSimple = 0;
constexpr int kExitNotSimple = 1;
constexpr int kExitViolation = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitGuard = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DimensionGuard:
    case ErrorCode::TooLarge:
    case ErrorCode::UnsupportedField:
    case ErrorCode::SearchExhausted:
      return kExitGuard;
    case ErrorCode::InvalidAction:
      return kExitViolation;
    default:
      return kExitMalformed;
  }
}

struct OutputOptions {
  bool json = false;
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_flag("--json", opts.json, "emit a JSON report");
  cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
}

void add_guard_flags(CLI::App* cmd, Guards& guards) {
  cmd->add_option("--max-dim", guards.max_dim, "ring dimension bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-subspaces", guards.max_subspaces, "oracle subspace-scan bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bfs-depth", guards.bfs_depth, "witness search depth bound")
      ->check(CLI::PositiveNumber);
}

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty())
    std::cout << text;
  else
    write_text_file(opts.out_path, text);
}

void emit_json(const OutputOptions& opts, const ojson& j) { emit(opts, j.dump(2) + "\n"); }

DecisionMethod parse_method(const std::string& name) {
  if (name == "oracle") return DecisionMethod::Oracle;
  if (name == "theorems") return DecisionMethod::Criteria;
  if (name == "both") return DecisionMethod::Both;
  fail(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
}

std::vector<FieldSpec> parse_fields(const std::string& csv) {
  std::vector<FieldSpec> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(FieldSpec::from_name(part));
  }
  if (out.empty()) fail(ErrorCode::InvalidArgument, "no fields given");
  return out;
}

int cmd_validate(const std::string& path, const OutputOptions& opts) {
  PartialAction action = instance_from_json(load_json_file(path));
  ValidationReport report = validate_action(action);
  if (opts.json) {
    emit_json(opts, validation_report_json(report));
  } else {
    std::ostringstream text;
    if (report.ok()) {
      text << "ok: all partial action axioms hold\n";
    } else {
      text << report.violations.size() << " violation(s):\n";
      for (const ActionViolation& v : report.violations)
        text << "  [" << v.axiom_name() << "] " << v.detail << "\n";
    }
    emit(opts, text.str());
  }
  return report.ok() ? kExitSimple : kExitViolation;
}

int cmd_check(const std::string& path, const FieldSpec& field, const Guards& guards,
              const OutputOptions& opts) {
  PartialAction action = instance_from_json(load_json_file(path));
  ojson report = check_report_json(action, field, guards);
  if (opts.json) {
    emit_json(opts, report);
  } else {
    std::ostringstream text;
    text << "group: " << report.at("group").get<std::string>() << "\n"
         << "|X| = " << report.at("set_size") << ", ring dim = " << report.at("ring_dim") << "\n"
         << "valid: " << (report.at("valid").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : report.at("violations"))
      text << "  [" << v.at("axiom").get<std::string>() << "] "
           << v.at("detail").get<std::string>() << "\n";
    if (report.contains("minimal")) {
      text << "minimal: " << (report.at("minimal").get<bool>() ? "yes" : "no") << "\n"
           << "free: " << (report.at("free").get<bool>() ? "yes" : "no") << "\n"
           << "topologically free: "
           << (report.at("topologically_free").get<bool>() ? "yes" : "no") << "\n";
      if (report.contains("g_simple") && !report.at("g_simple").is_null())
        text << "G-simple: " << (report.at("g_simple").get<bool>() ? "yes" : "no") << "\n";
    }
    emit(opts, text.str());
  }
  return kExitSimple;
}

int cmd_simplicity(const std::string& path, const FieldSpec& field, DecisionMethod method,
                   const Guards& guards, bool timings, const OutputOptions& opts) {
  PartialAction action = instance_from_json(load_json_file(path));
  RingSpace space(action, guards);
  const auto start = std::chrono::steady_clock::now();
  SimplicityDecision decision = decide_simplicity(space, field, method, guards);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::optional<ojson> timing_json;
  if (timings) {
    ojson t;
    t["decide"] = elapsed;
    timing_json = t;
  }
  if (opts.json) {
    emit_json(opts, simplicity_report_json(action, field, decision, guards, timing_json));
  } else {
    std::ostringstream text;
    text << "verdict: " << (decision.simple ? "simple" : "not simple") << " over "
         << field.name() << (decision.agree ? "" : "  [ROUTES DISAGREE]") << "\n";
    if (decision.oracle)
      text << "  oracle: " << (decision.oracle->simple ? "simple" : "not simple") << " ("
           << decision.oracle->scanned << " subspaces scanned)\n";
    if (decision.criteria) {
      text << "  minimal: " << (decision.criteria->minimal ? "yes" : "no")
           << ", free: " << (decision.criteria->free ? "yes" : "no")
           << ", G-simple: " << (decision.criteria->g_simple ? "yes" : "no");
      if (decision.criteria->corners_are_fields)
        text << ", corner centers fields: "
             << (*decision.criteria->corners_are_fields ? "yes" : "no");
      text << "\n";
    }
    emit(opts, text.str());
  }
  if (!decision.agree) return kExitViolation;
  return decision.simple ? kExitSimple : kExitNotSimple;
}

int cmd_suite(bool exhaustive, int random_count, std::uint64_t seed, const std::string& fields_csv,
              const std::string& method_name, const Guards& guards, bool timings,
              const OutputOptions& opts) {
  SuiteOptions options;
  options.fields = parse_fields(fields_csv);
  options.method = parse_method(method_name);
  options.guards = guards;

  std::vector<CorpusInstance> corpus;
  std::string mode;
  std::optional<std::uint64_t> seed_out;
  if (exhaustive) {
    corpus = exhaustive_corpus();
    mode = "exhaustive";
  } else {
    corpus = random_corpus(random_count, seed);
    mode = "random";
    seed_out = seed;
  }

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = run_suite(corpus, options);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::optional<ojson> timing_json;
  if (timings) {
    ojson t;
    t["run"] = elapsed;
    timing_json = t;
  }

  if (opts.json) {
    emit_json(opts, suite_report_json(corpus, report, options, mode, seed_out, timing_json));
  } else {
    std::ostringstream text;
    text << mode << " suite: " << corpus.size() << " instance(s), "
         << report.summary.total << " (instance, field) pair(s)\n"
         << "  decided: " << report.summary.decided << " (simple " << report.summary.simple
         << ", not simple " << report.summary.not_simple << ")\n"
         << "  disagreements: " << report.summary.disagreements << "\n"
         << "  obstructions: not minimal " << report.summary.not_minimal << ", not free "
         << report.summary.not_free << ", not G-simple " << report.summary.not_g_simple
         << ", corner center not a field " << report.summary.corner_center_not_field << "\n"
         << "  skipped by guards: " << report.summary.skipped << "\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (const FieldOutcome& outcome : report.results[i].outcomes) {
        if (outcome.agree) continue;
        text << "  DISAGREEMENT at " << corpus[i].id << " over " << outcome.field.name() << "\n";
      }
    }
    emit(opts, text.str());
  }
  return report.summary.disagreements == 0 ? kExitSimple : kExitViolation;
}

int cmd_example(const std::string& kind, int n, const OutputOptions& opts) {
  if (kind != "shift")
    fail(ErrorCode::InvalidArgument, "unknown example '" + kind + "' (try: shift)");
  emit_json(opts, instance_to_json(make_shift_window(n)));
  return kExitSimple;
}

int cmd_gen(std::uint64_t seed, const OutputOptions& opts) {
  std::vector<CorpusInstance> corpus = random_corpus(1, seed);
  emit_json(opts, instance_to_json(corpus.front().action));
  return kExitSimple;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for partial skew group rings of abelian groups"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string path;
  std::string field_name = "gf2";
  std::string method_name = "both";
  std::string fields_csv = "gf2";
  std::string example_kind;
  int shift_n = 2;
  int random_count = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool timings = false;
  Guards guards;
  OutputOptions output;

  CLI::App* validate = app.add_subcommand("validate", "check the partial action axioms");
  validate->add_option("instance", path, "instance JSON file")->required();
  add_output_flags(validate, output);

  CLI::App* check = app.add_subcommand("check", "validate and report derived facts");
  check->add_option("instance", path, "instance JSON file")->required();
  check->add_option("--field", field_name, "coefficient field (gf2|gf3|gf5|rational)");
  add_output_flags(check, output);
  add_guard_flags(check, guards);

  CLI::App* simplicity =
      app.add_subcommand("simplicity", "decide simplicity of the skew group ring");
  simplicity->add_option("instance", path, "instance JSON file")->required();
  simplicity->add_option("--field", field_name, "coefficient field (gf2|gf3|gf5|rational)");
  simplicity->add_option("--method", method_name, "oracle|theorems|both");
  simplicity->add_flag("--timings", timings, "include timings in the report");
  add_output_flags(simplicity, output);
  add_guard_flags(simplicity, guards);

  CLI::App* suite = app.add_subcommand("suite", "cross-validate verdicts over a corpus");
  suite->add_flag("--exhaustive", exhaustive, "run the exhaustive restriction corpus");
  suite->add_option("--random", random_count, "number of random instances");
  suite->add_option("--seed", seed, "random corpus seed");
  suite->add_option("--fields", fields_csv, "comma-separated coefficient fields");
  suite->add_option("--method", method_name, "oracle|theorems|both");
  suite->add_flag("--timings", timings, "include timings in the report");
  add_output_flags(suite, output);
  add_guard_flags(suite, guards);

  CLI::App* example = app.add_subcommand("example", "emit a built-in example instance");
  example->add_option("kind", example_kind, "example family (shift)")->required();
  example->add_option("--n", shift_n, "window size for the shift example");
  add_output_flags(example, output);

  CLI::App* gen = app.add_subcommand("gen", "emit one random instance");
  gen->add_option("--seed", seed, "random seed");
  add_output_flags(gen, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help/--version exit 0 through here; genuine argument errors land on
    // the malformed-input code so CI sees one consistent contract
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitMalformed;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, output);
    if (check->parsed())
      return cmd_check(path, FieldSpec::from_name(field_name), guards, output);
    if (simplicity->parsed())
      return cmd_simplicity(path, FieldSpec::from_name(field_name), parse_method(method_name),
                            guards, timings, output);
    if (suite->parsed()) {
      if (!exhaustive && random_count <= 0)
        fail(ErrorCode::InvalidArgument, "suite needs --exhaustive or --random N");
      if (exhaustive && random_count > 0)
        fail(ErrorCode::InvalidArgument, "choose one of --exhaustive and --random N");
      return cmd_suite(exhaustive, random_count, seed, fields_csv, method_name, guards, timings,
                       output);
    }
    if (example->parsed()) return cmd_example(example_kind, shift_n, output);
    if (gen->parsed()) return cmd_gen(seed, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitSimple;
}
