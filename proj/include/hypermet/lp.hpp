#pragma once

#include <optional>
#include <vector>

#include "hypermet/matrix.hpp"

namespace hypermet {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class VarSign { Free, NonNegative };

/// rows: A_i·x (relation_i) rhs_i. Optional objective is minimized.
struct LPProblem {
  RatMatrix a;
  RatVector rhs;
  std::vector<Relation> relations;
  std::vector<VarSign> signs;
  std::optional<RatVector> objective;

  /// All-equality, all-nonnegative system A·x = rhs, x ≥ 0.
  static LPProblem standard(RatMatrix a, RatVector rhs);
};

enum class LPStatus { Feasible, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  RatVector point;     // feasible (optimal, when an objective is set) point
  Rational value;      // objective at point
  RatVector farkas;    // one multiplier per row when infeasible
};

/// Exact two-phase simplex with Bland's rule. Exactly one certificate is
/// populated: a point when feasible, a Farkas multiplier vector when not.
/// Unbounded is only reported when an objective is present.
LPResult lp_feasible(const LPProblem& p);

bool verify_point(const LPProblem& p, const RatVector& x);

/// y certifies infeasibility: yᵀb < 0, sign-compatible with the row
/// relations, and yᵀA nonnegative on nonnegative variables, zero on free ones.
bool verify_farkas(const LPProblem& p, const RatVector& y);

}  // namespace hypermet
