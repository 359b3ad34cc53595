#pragma once

#include <stdexcept>
#include <string>

namespace vfk {

/// Machine-readable error categories shared by every module.
enum class ErrorCode {
  InvalidInput,
  NotAssociative,
  NotCancellative,
  NoIdentity,
  NotASubgroup,
  NotAHomomorphism,
  NotAGroup,
  NotConfluent,
  NonReducedRuleWord,
  UnknownSymbol,
  NotCnf,
  AlphabetMismatch,
  NotBasedAtP,
  InvalidMove,
  ResultNotReduced,
  NotReduced,
  NotStabilized,
  ExplosionGuard,
  NotATree,
  StepTooLong,
  VertexOutsideBall,
  BudgetExhausted,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vfk
