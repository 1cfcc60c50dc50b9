#ifndef SKEWLAB_SUITE_HPP
#define SKEWLAB_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewlab/corpus.hpp"
#include "skewlab/simplicity.hpp"

namespace skewlab {

struct SuiteOptions {
  std::vector<FieldSpec> fields = {FieldSpec::gfp(2)};
  DecisionMethod method = DecisionMethod::Both;
  Guards guards;
};

// What one (instance, field) pair produced.  A route that hit a resource
// guard records its message instead of a verdict; anything else escaping a
// route is a bug and propagates.
struct FieldOutcome {
  FieldSpec field = FieldSpec::gfp(2);
  std::optional<OracleVerdict> oracle;
  std::optional<std::string> oracle_error;
  std::optional<CriteriaVerdict> criteria;
  std::optional<std::string> criteria_error;
  bool agree = true;                // among the routes that produced verdicts
  std::optional<bool> simple;       // consensus; nullopt when nothing decided
};

struct SuiteInstanceResult {
  std::string id;
  std::vector<FieldOutcome> outcomes;
};

struct SuiteSummary {
  int total = 0;         // (instance, field) pairs
  int decided = 0;
  int simple = 0;
  int not_simple = 0;
  int disagreements = 0;
  int skipped = 0;       // pairs where no route produced a verdict
  // obstruction tallies over pairs where the characterizations ran; one
  // pair can land in several rows (e.g. neither minimal nor free)
  int not_minimal = 0;
  int not_free = 0;
  int not_g_simple = 0;
  int corner_center_not_field = 0;
};

struct SuiteReport {
  std::vector<SuiteInstanceResult> results;
  SuiteSummary summary;
};

SuiteReport run_suite(const std::vector<CorpusInstance>& corpus, const SuiteOptions& options);

} // namespace skewlab

#endif
