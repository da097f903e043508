#include "hypermet/error.hpp"

namespace hypermet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SumOfBNotOne: return "sum-of-b-not-one";
    case ErrorCode::DegenerateGram: return "degenerate-gram";
    case ErrorCode::NotPositiveDefinite: return "not-positive-definite";
    case ErrorCode::NotPositiveSemidefinite: return "not-positive-semidefinite";
    case ErrorCode::PsdIrreducible: return "psd-irreducible";
    case ErrorCode::NotHypermetric: return "not-hypermetric";
    case ErrorCode::NotExtreme: return "not-extreme";
    case ErrorCode::PointNotInCone: return "point-not-in-cone";
    case ErrorCode::NotPointed: return "not-pointed";
    case ErrorCode::BudgetExhausted: return "budget-exhausted";
    case ErrorCode::Unbounded: return "unbounded";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace hypermet
