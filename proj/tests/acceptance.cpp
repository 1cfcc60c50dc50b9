// Acceptance suite: the cross-validation guarantees the workbench is built
// around, exercised end to end on a fixed corpus.  Each criterion prints one
// PASS/FAIL line; the binary exits nonzero when any criterion fails.
//
// The corpus is the exhaustive restriction sweep over supersets of size at
// most three plus 200 seeded random instances with ring dimension at most
// twelve, so every claim below is checked on a few hundred independently
// constructed rings.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "skewlab/corpus.hpp"
#include "skewlab/io.hpp"

using namespace skewlab;

namespace {

// ---------------------------------------------------------------- harness

struct Tally {
  std::vector<std::string> failures;
  long checks = 0;
  std::string note; // appended to the PASS line, e.g. instance counts

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SKEWLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

constexpr std::uint64_t kCorpusSeed = 1729;
constexpr int kRandomCount = 200;

const std::vector<CorpusInstance>& corpus() {
  static const std::vector<CorpusInstance> all = [] {
    CorpusOptions options;
    options.max_superset = 3;
    options.max_ring_dim = 12;
    std::vector<CorpusInstance> instances = exhaustive_corpus(options);
    std::vector<CorpusInstance> random = random_corpus(kRandomCount, kCorpusSeed, options);
    instances.insert(instances.end(), random.begin(), random.end());
    return instances;
  }();
  return all;
}

std::vector<std::vector<int>> nonempty_subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(i);
    if (static_cast<int>(subset.size()) <= max_size) out.push_back(std::move(subset));
  }
  return out;
}

std::string subset_str(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

// ------------------------------------------------------------- criteria

// 1. The brute-force ideal scan and the dynamical characterization
//    (minimal && free) must give the same verdict on every instance.
void oracle_matches_dynamics(Tally& t) {
  int simple_count = 0;
  for (const CorpusInstance& inst : corpus()) {
    RingSpace space(inst.action);
    bool oracle = is_simple_oracle(space, FieldSpec::gfp(2)).simple;
    bool dynamical = is_minimal(inst.action).minimal && is_free(inst.action).free;
    t.require(oracle == dynamical,
              inst.id + ": oracle says " + (oracle ? "simple" : "not simple") +
                  " but minimal&&free says the opposite");
    if (oracle) ++simple_count;
  }
  t.note = std::to_string(corpus().size()) + " instances, " +
           std::to_string(simple_count) + " simple";
}

// 2. Same oracle against the algebraic characterization: G-simplicity
//    together with every corner center being a field.
void oracle_matches_algebra(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  for (const CorpusInstance& inst : corpus()) {
    RingSpace space(inst.action);
    bool oracle = is_simple_oracle(space, f2).simple;
    bool algebraic = is_G_simple(inst.action, f2).g_simple;
    if (algebraic) {
      for (const std::vector<int>& unit_set :
           nonempty_subsets(inst.action.size(), inst.action.size())) {
        if (!corner_center_field_check(space, f2, unit_set).is_field) {
          algebraic = false;
          break;
        }
      }
    }
    t.require(oracle == algebraic,
              inst.id + ": oracle and (G-simple && corner centers are fields) disagree");
  }
  t.note = std::to_string(corpus().size()) + " instances";
}

// 3. The shift-window family through the actual CLI binary: dimension n^2,
//    minimal and free for n = 2..5, and the GF(2) oracle confirms
//    simplicity where its scan is in reach.
void shift_windows_via_cli(Tally& t) {
  for (int n = 2; n <= 5; ++n) {
    const std::string path = temp_path("skewlab-acceptance-shift" + std::to_string(n) + ".json");
    const std::string tag = "shift n=" + std::to_string(n);
    RunResult gen = run_cli("example shift --n " + std::to_string(n) + " --out " + path);
    t.require(gen.status == 0, tag + ": example generation failed");

    RunResult chk = run_cli("check " + path + " --json");
    t.require(chk.status == 0, tag + ": check failed");
    ojson report = ojson::parse(chk.out);
    // the dimension two ways: the slice-size sum n + 2(1+...+(n-1)) must
    // close to n^2, and the tool must report exactly that
    long long slice_sum = n;
    for (int k = 1; k < n; ++k) slice_sum += 2 * k;
    t.require(slice_sum == static_cast<long long>(n) * n, tag + ": slice sum is not n^2");
    t.require(report.at("ring_dim").get<long long>() == slice_sum,
              tag + ": reported ring_dim " + report.at("ring_dim").dump());
    t.require(report.at("minimal").get<bool>(), tag + ": not reported minimal");
    t.require(report.at("free").get<bool>(), tag + ": not reported free");

    // n = 5 means dimension 25: the full GF(2) scan has 2^25 - 1
    // one-dimensional subspaces, so only the characterization routes run
    const std::string method = n <= 4 ? "both" : "theorems";
    RunResult dec = run_cli("simplicity " + path + " --field gf2 --method " + method + " --json");
    t.require(dec.status == 0, tag + ": simplicity exit " + std::to_string(dec.status));
    ojson verdict = ojson::parse(dec.out);
    t.require(verdict.at("simple").get<bool>(), tag + ": not reported simple");
    t.require(verdict.at("agree").get<bool>(), tag + ": routes disagree");
    if (n <= 4)
      t.require(verdict.at("oracle").get<std::string>() == "simple",
                tag + ": oracle verdict " + verdict.at("oracle").dump());
  }
  t.note = "n=2..5, oracle cross-checked for n<=4";
}

// 4. Set-level invariance of V and ideal-level invariance of F_0(V) are
//    the same predicate, for every subset of every instance, over prime
//    fields and the rationals alike.
void invariance_routes_coincide(Tally& t) {
  long subsets = 0;
  for (const CorpusInstance& inst : corpus()) {
    const int n = inst.action.size();
    for (const FieldSpec& field :
         {FieldSpec::gfp(2), FieldSpec::gfp(3), FieldSpec::rationals()}) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) subset.push_back(i);
        CorrespondenceResult result = invariance_correspondence(inst.action, field, subset);
        t.require(result.set_route == result.ideal_route,
                  inst.id + " subset " + subset_str(subset) + " over " + field.name() +
                      ": set and ideal routes disagree");
        ++subsets;
      }
    }
  }
  t.note = std::to_string(subsets) + " (instance, field, subset) triples";
}

// 5. Minimality of the action and G-simplicity of F_0(X) coincide.  The two
//    sides are computed by unrelated code paths (orbit chase vs. invariant
//    ideal enumeration), so agreement is evidence, not bookkeeping.
void minimality_is_g_simplicity(Tally& t) {
  for (const CorpusInstance& inst : corpus()) {
    bool minimal = is_minimal(inst.action).minimal;
    bool g_simple = is_G_simple(inst.action, FieldSpec::gfp(2)).g_simple;
    t.require(minimal == g_simple, inst.id + ": minimal=" + std::to_string(minimal) +
                                       " g_simple=" + std::to_string(g_simple));
  }
  t.note = std::to_string(corpus().size()) + " instances";
}

// 6. On every G-simple instance, every canonical basis element r and every
//    unit set A with |A| <= 2 admit a certificate r' in RrR with
//    P_0(r') = chi_A and group support no larger than r's.  The search must
//    never exhaust its depth budget, and every certificate is re-verified
//    against an independently computed ideal closure.
void unit_projection_certificates(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  long searches = 0;
  int g_simple_count = 0;
  for (const CorpusInstance& inst : corpus()) {
    if (!is_G_simple(inst.action, f2).g_simple) continue;
    ++g_simple_count;
    RingSpace space(inst.action);
    const GroupElement zero = inst.action.group().zero();
    std::vector<std::vector<int>> unit_sets = nonempty_subsets(inst.action.size(), 2);
    for (int i = 0; i < space.dim(); ++i) {
      SkewRingElement r = space.basis_element(f2, i);
      IdealSubspace closure = ideal_closure(space, f2, {r});
      for (const std::vector<int>& unit_set : unit_sets) {
        const std::string tag =
            inst.id + " basis " + std::to_string(i) + " A=" + subset_str(unit_set);
        ++searches;
        SkewRingElement cert(f2, inst.action.size());
        try {
          cert = unit_projection_witness(space, f2, r, unit_set);
        } catch (const Error& e) {
          t.require(false, tag + ": search failed (" + e.what() + ")");
          continue;
        }
        t.require(cert.component(zero) ==
                      FinSuppFunction::indicator(f2, inst.action.size(), unit_set),
                  tag + ": certificate projection is not chi_A");
        t.require(subspace_contains(closure.basis, space.coords(cert)),
                  tag + ": certificate is not in the ideal generated by r");
        t.require(cert.group_support_size() <= r.group_support_size(),
                  tag + ": certificate group support grew");
      }
    }
  }
  t.note = std::to_string(searches) + " searches on " + std::to_string(g_simple_count) +
           " G-simple instances, none exhausted";
}

// 7. On every simple instance and every basis generator, the ideal it
//    generates admits a central certificate at the full unit chi_X: the
//    witness lies in the ideal, projects to chi_X delta_0, and commutes
//    with the whole corner.
void central_corner_certificates(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  long witnesses = 0;
  int simple_count = 0;
  for (const CorpusInstance& inst : corpus()) {
    RingSpace space(inst.action);
    if (!is_simple_oracle(space, f2).simple) continue;
    ++simple_count;
    const GroupElement zero = inst.action.group().zero();
    std::vector<int> all_points(static_cast<std::size_t>(inst.action.size()));
    for (int i = 0; i < inst.action.size(); ++i) all_points[static_cast<std::size_t>(i)] = i;
    const InducedAction alpha(space.action(), f2);
    SubspaceBasis corner = corner_basis(space, f2, all_points);
    for (int i = 0; i < space.dim(); ++i) {
      const std::string tag = inst.id + " basis " + std::to_string(i);
      IdealSubspace J = ideal_closure(space, f2, {space.basis_element(f2, i)});
      SkewRingElement witness(f2, inst.action.size());
      try {
        witness = central_ideal_witness(space, f2, J, all_points);
      } catch (const Error& e) {
        t.require(false, tag + ": witness search failed (" + e.what() + ")");
        continue;
      }
      ++witnesses;
      t.require(subspace_contains(J.basis, space.coords(witness)),
                tag + ": witness left the ideal");
      t.require(witness.component(zero) ==
                    FinSuppFunction::indicator(f2, inst.action.size(), all_points),
                tag + ": witness projection is not chi_X");
      for (const std::vector<Scalar>& row : corner.rows) {
        SkewRingElement g = space.element(f2, row);
        if (!(ring_mul(alpha, witness, g) == ring_mul(alpha, g, witness))) {
          t.require(false, tag + ": witness does not centralize the corner");
          break;
        }
      }
    }
  }
  t.note = std::to_string(witnesses) + " witnesses on " + std::to_string(simple_count) +
           " simple instances";
}

// 8. Every fixed point x of some h_g, g != 0, yields the obstruction ideal
//    generated by chi_x delta_0 - chi_x delta_g: proper, closed under both
//    multiplications, all basis rows with vanishing coefficient sum, and
//    chi_x delta_0 outside it.
void fixed_point_obstructions(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  long pairs = 0;
  int nonfree_count = 0;
  for (const CorpusInstance& inst : corpus()) {
    if (is_free(inst.action).free) continue;
    ++nonfree_count;
    RingSpace space(inst.action);
    const GroupElement zero = inst.action.group().zero();
    for (const GroupElement& g : inst.action.effective_support()) {
      if (g == zero) continue;
      for (int x : fixed_points(inst.action, g)) {
        ++pairs;
        const std::string tag =
            inst.id + " fixed (" + inst.action.label(x) + ", " + g.key() + ")";
        IdealSubspace obstruction = nonfree_obstruction(space, f2, x, g);
        t.require(obstruction.left_closed && obstruction.right_closed,
                  tag + ": ideal re-verification failed");
        t.require(obstruction.basis.dim() > 0 && obstruction.basis.dim() < space.dim(),
                  tag + ": ideal is not proper");
        for (const std::vector<Scalar>& row : obstruction.basis.rows)
          t.require(space.element(f2, row).coefficient_sum().is_zero(),
                    tag + ": a basis row has nonzero coefficient sum");
        SkewRingElement unit = SkewRingElement::monomial(
            zero, FinSuppFunction::indicator(f2, inst.action.size(), {x}));
        t.require(!subspace_contains(obstruction.basis, space.coords(unit)),
                  tag + ": chi_x delta_0 landed inside the obstruction ideal");
      }
    }
  }
  t.note = std::to_string(pairs) + " fixed pairs on " + std::to_string(nonfree_count) +
           " non-free instances";
}

// 9. On free and minimal instances over GF(2), every corner center is as
//    rigid as it can be: each nonzero element is supported entirely on the
//    delta_0 component with 0-coordinate support exactly A.
void corner_center_structure(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  long centers = 0;
  for (const CorpusInstance& inst : corpus()) {
    if (!(is_minimal(inst.action).minimal && is_free(inst.action).free)) continue;
    RingSpace space(inst.action);
    const GroupElement zero = inst.action.group().zero();
    for (const std::vector<int>& unit_set :
         nonempty_subsets(inst.action.size(), inst.action.size())) {
      ++centers;
      const std::string tag = inst.id + " A=" + subset_str(unit_set);
      SubspaceBasis center = center_of_corner(space, f2, unit_set);
      if (center.dim() > 16) {
        t.require(false, tag + ": center too large to exhaust");
        continue;
      }
      // exhaust the nonzero GF(2) combinations of the center basis
      for (int mask = 1; mask < (1 << center.dim()); ++mask) {
        std::vector<Scalar> coords(static_cast<std::size_t>(space.dim()), Scalar::zero(f2));
        for (int i = 0; i < center.dim(); ++i) {
          if (!(mask & (1 << i))) continue;
          for (int j = 0; j < space.dim(); ++j)
            coords[static_cast<std::size_t>(j)] =
                coords[static_cast<std::size_t>(j)] +
                center.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        SkewRingElement elem = space.element(f2, coords);
        bool only_delta0 = true;
        for (const auto& [g, f] : elem.terms())
          if (!(g == zero)) only_delta0 = false;
        t.require(only_delta0, tag + ": a central element has a nonzero delta_t, t != 0");
        t.require(elem.component(zero).support() == unit_set,
                  tag + ": a central element's support is not exactly A");
      }
    }
  }
  t.note = std::to_string(centers) + " corner centers exhausted";
}

// 10. Multiplication associates on every basis triple: checked on the whole
//     corpus over GF(2) and on twenty instances over the rationals.
void associativity_everywhere(Tally& t) {
  const FieldSpec f2 = FieldSpec::gfp(2);
  int rational_runs = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const CorpusInstance& inst = corpus()[k];
    RingSpace space(inst.action);
    t.require(!associativity_witness(space, f2).has_value(),
              inst.id + ": a basis triple fails to associate over gf2");
    if (k < 20) {
      t.require(!associativity_witness(space, FieldSpec::rationals()).has_value(),
                inst.id + ": a basis triple fails to associate over the rationals");
      ++rational_runs;
    }
  }
  t.note = std::to_string(corpus().size()) + " instances over gf2, " +
           std::to_string(rational_runs) + " over the rationals";
}

// 11. The oracle's verdict cannot depend on the coefficient field: GF(2)
//     and GF(3) scans agree everywhere.  The subspace budget is raised so
//     the GF(3) scan of a dimension-12 ring fits without skips.
void field_independent_verdicts(Tally& t) {
  Guards guards;
  guards.max_subspaces = std::int64_t{1} << 19;
  for (const CorpusInstance& inst : corpus()) {
    RingSpace space(inst.action, guards);
    bool over_gf2 = is_simple_oracle(space, FieldSpec::gfp(2), guards).simple;
    bool over_gf3 = is_simple_oracle(space, FieldSpec::gfp(3), guards).simple;
    t.require(over_gf2 == over_gf3, inst.id + ": gf2 says " +
                                        (over_gf2 ? "simple" : "not simple") +
                                        ", gf3 says the opposite");
  }
  t.note = std::to_string(corpus().size()) + " instances, no skips";
}

// 12. Two suite runs with the same seed must produce byte-identical JSON.
void deterministic_suite_reports(Tally& t) {
  const std::string first = temp_path("skewlab-acceptance-suite-1.json");
  const std::string second = temp_path("skewlab-acceptance-suite-2.json");
  const std::string args = "suite --random 40 --seed 7 --fields gf2,gf3 --method both --json";
  RunResult a = run_cli(args + " --out " + first);
  RunResult b = run_cli(args + " --out " + second);
  t.require(a.status == 0, "first suite run exited " + std::to_string(a.status));
  t.require(b.status == 0, "second suite run exited " + std::to_string(b.status));
  const std::string report_a = read_file(first);
  const std::string report_b = read_file(second);
  t.require(!report_a.empty(), "first suite report is empty");
  t.require(report_a == report_b, "suite reports differ between runs");
  t.note = "40 random instances, gf2+gf3, two runs";
}

struct Criterion {
  const char* name;
  void (*run)(Tally&);
};

constexpr Criterion kCriteria[] = {
    {"GF(2) oracle equals (minimal && free)", oracle_matches_dynamics},
    {"GF(2) oracle equals (G-simple && corner centers are fields)", oracle_matches_algebra},
    {"shift windows through the CLI: dim n^2, minimal, free, simple", shift_windows_via_cli},
    {"set-level and ideal-level invariance coincide on every subset", invariance_routes_coincide},
    {"minimality coincides with G-simplicity", minimality_is_g_simplicity},
    {"unit-projection certificates exist and re-verify (|A| <= 2)", unit_projection_certificates},
    {"full-unit central certificates re-verify on simple instances", central_corner_certificates},
    {"fixed points yield proper obstruction ideals", fixed_point_obstructions},
    {"corner centers on simple instances are exactly chi_A delta_0", corner_center_structure},
    {"basis-triple associativity over gf2 and the rationals", associativity_everywhere},
    {"oracle verdicts agree between GF(2) and GF(3)", field_independent_verdicts},
    {"same-seed suite runs are byte-identical", deterministic_suite_reports},
};

} // namespace

int main() {
  const int total = static_cast<int>(std::size(kCriteria));
  std::printf("acceptance: %zu corpus instances (exhaustive |Y|<=3 plus %d random, seed %llu)\n",
              corpus().size(), kRandomCount,
              static_cast<unsigned long long>(kCorpusSeed));
  int passed = 0;
  for (int i = 0; i < total; ++i) {
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      kCriteria[i].run(tally);
    } catch (const std::exception& e) {
      tally.require(false, std::string("unexpected exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = tally.failures.empty();
    passed += ok ? 1 : 0;
    std::printf("[%2d/%d] %s  %s", i + 1, total, ok ? "PASS" : "FAIL", kCriteria[i].name);
    if (ok && !tally.note.empty()) std::printf(" (%s)", tally.note.c_str());
    std::printf("  [%.1fs]\n", seconds);
    for (std::size_t j = 0; j < tally.failures.size() && j < 5; ++j)
      std::printf("        - %s\n", tally.failures[j].c_str());
    if (tally.failures.size() > 5)
      std::printf("        (%zu more)\n", tally.failures.size() - 5);
  }
  std::printf("result: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
