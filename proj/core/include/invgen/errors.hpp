#ifndef INVGEN_ERRORS_HPP
#define INVGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invgen {

enum class ErrorKind {
  InvalidPermutation,
  OrderCapExceeded,
  SubgroupCapExceeded,
  NotSoluble,
  NotNormal,
  ElementNotInGroup,
  BudgetExceeded,
  SearchBoundExceeded,
  IterationBudgetExceeded,
  NotIrreducible,
  NotInvariableGenerators,
  FieldMismatch,
  GroupMismatch,
  DuplicateIsomorphismClass,
  CohomologyCapExceeded,
  NonCoprimePrime,
  SplittingAssumptionViolated,
  MissingAnnotation,
  HypothesisViolated,
  ParseError,
  UnknownSuite,
  Internal,
};

const char *error_kind_name(ErrorKind k);

/// All library failures carry a kind so callers (and the CLI exit-code
/// mapping) can react without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  bool is_cap() const {
    return kind_ == ErrorKind::OrderCapExceeded ||
           kind_ == ErrorKind::SubgroupCapExceeded ||
           kind_ == ErrorKind::BudgetExceeded ||
           kind_ == ErrorKind::CohomologyCapExceeded ||
           kind_ == ErrorKind::IterationBudgetExceeded ||
           kind_ == ErrorKind::SearchBoundExceeded;
  }

private:
  ErrorKind kind_;
};

inline const char *error_kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::InvalidPermutation: return "InvalidPermutation";
  case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorKind::SubgroupCapExceeded: return "SubgroupCapExceeded";
  case ErrorKind::NotSoluble: return "NotSoluble";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
  case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
  case ErrorKind::NotIrreducible: return "NotIrreducible";
  case ErrorKind::NotInvariableGenerators: return "NotInvariableGenerators";
  case ErrorKind::FieldMismatch: return "FieldMismatch";
  case ErrorKind::GroupMismatch: return "GroupMismatch";
  case ErrorKind::DuplicateIsomorphismClass: return "DuplicateIsomorphismClass";
  case ErrorKind::CohomologyCapExceeded: return "CohomologyCapExceeded";
  case ErrorKind::NonCoprimePrime: return "NonCoprimePrime";
  case ErrorKind::SplittingAssumptionViolated: return "SplittingAssumptionViolated";
  case ErrorKind::MissingAnnotation: return "MissingAnnotation";
  case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::UnknownSuite: return "UnknownSuite";
  case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

} // namespace invgen

#endif
