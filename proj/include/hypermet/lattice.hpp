#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermet/matrix.hpp"

namespace hypermet {

/// Caps the number of enumeration-tree nodes visited by a single query.
struct EnumerationBudget {
  std::uint64_t node_limit = 100'000'000;
};

/// Lattice Zⁿ with the quadratic form `gram`, a target point in generator
/// coordinates and a squared radius.
struct CVPQuery {
  RatMatrix gram;
  RatVector target;
  Rational radius2;
};

/// Some w with (w - x)ᵀG(w - x) < r2: the one of least squared distance,
/// lexicographically smallest among ties. Throws NotPositiveDefinite.
std::optional<IntVector> cvp_strictly_inside(const CVPQuery& q, const EnumerationBudget& budget = {});

/// Every w with (w - x)ᵀG(w - x) < r2, lexicographically sorted.
std::vector<IntVector> cvp_all_strictly_inside(const CVPQuery& q, const EnumerationBudget& budget = {});

/// Every w with (w - x)ᵀG(w - x) == r2, lexicographically sorted.
std::vector<IntVector> cvp_at_exact_radius(const CVPQuery& q, const EnumerationBudget& budget = {});

/// A rank-r PSD Gram expressed through r of its generators.
struct PsdReduction {
  std::vector<std::size_t> subfamily;  // r generator indices, increasing
  RatMatrix reduced_gram;              // Gram of the subfamily (positive definite)
  std::vector<IntVector> expressions;  // per generator j: u_j = Σ_k expressions[j][k]·u_{subfamily[k]}
  std::vector<RatVector> points;       // caller points re-expressed over the subfamily
};

/// Searches r-subsets in lexicographic order for one through which every
/// generator is an integral combination. Full rank gives the identity
/// reduction. Throws NotPositiveSemidefinite.
std::optional<PsdReduction> psd_reduce(const RatMatrix& gram, const std::vector<RatVector>& points = {});

enum class FormClass { PositiveDefinite, Indefinite, Semidefinite };

/// q(w) = wᵀGw - linearᵀw + constant over w ∈ Zⁿ.
struct InhomogeneousForm {
  RatMatrix gram;
  RatVector linear;
  Rational constant;

  Rational value(const IntVector& w) const;
};

struct NegativeSearch {
  FormClass form_class = FormClass::PositiveDefinite;
  std::size_t rank = 0;
  std::vector<IntVector> witnesses;  // each has q(w) < 0; empty when none exists
};

/// Decides whether q takes a negative value on Zⁿ, dispatching on the
/// signature of G. For positive definite G, `collect_all` returns every
/// negative point; otherwise a single witness is returned. For indefinite G
/// the points of the box |w_i| <= 1 are tried first (all negative ones with
/// `collect_all`, else the most negative); failing that, a multiple of a
/// negative direction is returned.
/// Throws PsdIrreducible when a semidefinite G admits no integral subfamily.
NegativeSearch find_negative_points(const InhomogeneousForm& form, bool collect_all,
                                    const EnumerationBudget& budget = {});

struct NormQueryResult {
  FormClass form_class = FormClass::PositiveDefinite;
  std::optional<IntVector> witness;  // absent: no vector strictly inside
};

/// Is there w with (w - x)ᵀG(w - x) < r2, for any symmetric G?
NormQueryResult dispatch_norm_query(const RatMatrix& gram, const RatVector& x, const Rational& r2,
                                    const EnumerationBudget& budget = {});

}  // namespace hypermet
