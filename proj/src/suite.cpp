#include "skewlab/suite.hpp"

namespace skewlab {

namespace {

bool is_guard_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DimensionGuard:
    case ErrorCode::TooLarge:
    case ErrorCode::UnsupportedField:
    case ErrorCode::SearchExhausted:
      return true;
    default:
      return false;
  }
}

} // namespace

SuiteReport run_suite(const std::vector<CorpusInstance>& corpus, const SuiteOptions& options) {
  SuiteReport report;
  for (const CorpusInstance& item : corpus) {
    SuiteInstanceResult result{item.id, {}};
    for (const FieldSpec& field : options.fields) {
      FieldOutcome outcome;
      outcome.field = field;
      ++report.summary.total;
      try {
        RingSpace space(item.action, options.guards);
        if (options.method != DecisionMethod::Criteria) {
          try {
            outcome.oracle = is_simple_oracle(space, field, options.guards);
          } catch (const Error& e) {
            if (!is_guard_error(e)) throw;
            outcome.oracle_error = e.what();
          }
        }
        if (options.method != DecisionMethod::Oracle) {
          try {
            outcome.criteria = simplicity_criteria(space, field, options.guards);
          } catch (const Error& e) {
            if (!is_guard_error(e)) throw;
            outcome.criteria_error = e.what();
          }
        }
      } catch (const Error& e) {
        // the ring itself was out of bounds; both routes are skipped
        if (!is_guard_error(e)) throw;
        outcome.oracle_error = e.what();
        outcome.criteria_error = e.what();
      }

      if (outcome.criteria) {
        if (!outcome.criteria->minimal) ++report.summary.not_minimal;
        if (!outcome.criteria->free) ++report.summary.not_free;
        if (!outcome.criteria->g_simple) ++report.summary.not_g_simple;
        if (outcome.criteria->corners_are_fields && !*outcome.criteria->corners_are_fields)
          ++report.summary.corner_center_not_field;
      }

      std::vector<bool> votes;
      if (outcome.oracle) votes.push_back(outcome.oracle->simple);
      if (outcome.criteria) {
        votes.push_back(outcome.criteria->dynamical_simple());
        if (auto alg = outcome.criteria->algebraic_simple()) votes.push_back(*alg);
      }
      if (votes.empty()) {
        ++report.summary.skipped;
      } else {
        for (bool b : votes)
          if (b != votes.front()) outcome.agree = false;
        if (outcome.agree) {
          outcome.simple = votes.front();
          ++report.summary.decided;
          ++(*outcome.simple ? report.summary.simple : report.summary.not_simple);
        } else {
          ++report.summary.disagreements;
        }
      }
      result.outcomes.push_back(std::move(outcome));
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

} // namespace skewlab
