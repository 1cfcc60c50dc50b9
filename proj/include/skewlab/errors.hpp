#ifndef SKEWLAB_ERRORS_HPP
#define SKEWLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewlab {

// Every failure mode the library can signal.  The CLI maps these onto its
// exit-code contract, so additions here need a corresponding mapping there.
enum class ErrorCode {
  MixedFields,       // arithmetic between scalars of different fields
  DivisionByZero,
  SpecMismatch,      // group elements of incompatible arity
  InfiniteGroup,     // enumeration of a group with free rank > 0
  MalformedInstance, // unparseable or structurally bad instance data
  UnknownLabel,
  EmptySet,
  DomainViolation,   // applying h_t / alpha_t outside its domain
  ActionMismatch,    // combining ring elements over different actions/fields
  InvalidAction,     // constructing ring machinery over an axiom-violating action
  UnsupportedField,  // operation needs a finite field but got the rationals
  DimensionGuard,    // a configured resource bound was exceeded
  TooLarge,          // enumeration guard (sets, units, subspaces)
  NotGSimple,        // witness search requires a G-simple coefficient algebra
  SearchExhausted,   // witness search hit its depth cap without a certificate
  NotAnIdeal,
  ZeroIdeal,
  NotAFixedPoint,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedFields: return "mixed-fields";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::SpecMismatch: return "spec-mismatch";
    case ErrorCode::InfiniteGroup: return "infinite-group";
    case ErrorCode::MalformedInstance: return "malformed-instance";
    case ErrorCode::UnknownLabel: return "unknown-label";
    case ErrorCode::EmptySet: return "empty-set";
    case ErrorCode::DomainViolation: return "domain-violation";
    case ErrorCode::ActionMismatch: return "action-mismatch";
    case ErrorCode::InvalidAction: return "invalid-action";
    case ErrorCode::UnsupportedField: return "unsupported-field";
    case ErrorCode::DimensionGuard: return "dimension-guard";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::NotGSimple: return "not-g-simple";
    case ErrorCode::SearchExhausted: return "search-exhausted";
    case ErrorCode::NotAnIdeal: return "not-an-ideal";
    case ErrorCode::ZeroIdeal: return "zero-ideal";
    case ErrorCode::NotAFixedPoint: return "not-a-fixed-point";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown-error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace skewlab

#endif
