#include "vfk/error.hpp"

namespace vfk {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCancellative: return "NotCancellative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotConfluent: return "NotConfluent";
    case ErrorCode::NonReducedRuleWord: return "NonReducedRuleWord";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::NotCnf: return "NotCnf";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotBasedAtP: return "NotBasedAtP";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::ResultNotReduced: return "ResultNotReduced";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::StepTooLong: return "StepTooLong";
    case ErrorCode::VertexOutsideBall: return "VertexOutsideBall";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

}  // namespace vfk
