#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hypermet/hypermetric.hpp"

namespace hypermet {

/// Coefficients of H(b)d as a linear form in pair-space: coordinate (i, j) is b_i·b_j.
IntVector functional_of(const BVector& b);

/// The cone C(F) = {d : H(b)d ≤ 0 for all b in F}. Inequalities are kept
/// unique by functional (the lexicographically smallest b wins).
class ConeSystem {
 public:
  ConeSystem() = default;
  ConeSystem(std::size_t n, const std::vector<BVector>& inequalities);

  std::size_t n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return DistanceVector::pair_count(n_); }
  const std::vector<BVector>& inequalities() const noexcept { return b_; }
  const std::vector<IntVector>& functionals() const noexcept { return f_; }
  std::size_t size() const noexcept { return b_.size(); }

  /// Returns the number of genuinely new inequalities.
  std::size_t add(const std::vector<BVector>& more);
  bool contains(const BVector& b) const;

 private:
  std::size_t n_ = 0;
  std::vector<BVector> b_;
  std::vector<IntVector> f_;
  std::map<IntVector, std::size_t> index_;  // functional -> position
};

/// Caps the ray count of an intermediate double-description cone.
struct RayBudget {
  std::size_t ray_limit = 2'000'000;
};

/// Extreme rays of the pointed cone {x ∈ R^dim : f·x ≤ 0 for f in rows},
/// primitive and sorted. Throws NotPointed when the rows have rank < dim.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows, std::size_t dim, const RayBudget& budget = {});

/// b in F with H(b)d = 0 and nonzero functional, in F order.
std::vector<BVector> incident_subset(const ConeSystem& cone, const RatVector& d);

struct ExtremeRayTest {
  bool extreme = false;
  std::size_t rank = 0;  // rank of the incident functionals
};

/// Throws PointNotInCone unless d satisfies every inequality.
ExtremeRayTest is_extreme_ray(const std::vector<IntVector>& functionals, const RatVector& d);
ExtremeRayTest is_extreme_ray(const ConeSystem& cone, const RatVector& d);

/// Directions leaving the extreme ray e along the edges of its local cone.
/// The local cone only depends on the functionals tight at e; the actual
/// neighbor along each direction is cut out by the full system, so the
/// (costly) dual description can be reused while F grows by inequalities
/// that are strict at e.
class LocalCone {
 public:
  /// Throws NotExtreme, PointNotInCone, NotPointed.
  LocalCone(const std::vector<IntVector>& functionals, const IntVector& e, const RayBudget& budget = {});

  const IntVector& ray() const noexcept { return e_; }
  std::size_t incident_count() const noexcept { return incident_; }
  /// Edge directions r (r_p = 0 at the pivot coordinate), sorted.
  const std::vector<IntVector>& directions() const noexcept { return dirs_; }

  /// The other boundary ray of C(F) ∩ span(e, r) for direction k, primitive.
  IntVector neighbor(const std::vector<IntVector>& functionals, std::size_t k) const;
  /// (f·r)/(-f·e) for direction k: the least s with r + s·e inside f·x ≤ 0.
  /// Absent when f is tight at e. neighbor() maximizes this over F, so a
  /// caller can maintain the maximum incrementally as F grows.
  std::optional<Rational> step_bound(const IntVector& f, std::size_t k) const;
  /// primitive(r_k + s·e).
  IntVector point(std::size_t k, const Rational& s) const;
  /// All neighbors, deduplicated and sorted.
  std::vector<IntVector> neighbors(const std::vector<IntVector>& functionals) const;

 private:
  IntVector e_;
  std::size_t incident_ = 0;
  std::vector<IntVector> dirs_;
};

/// Extreme rays of C(F) sharing a 2-face with the extreme ray e.
std::vector<IntVector> adjacent_rays(const std::vector<IntVector>& functionals, const IntVector& e,
                                     const RayBudget& budget = {});
std::vector<IntVector> adjacent_rays(const ConeSystem& cone, const IntVector& e, const RayBudget& budget = {});

struct IrredundancyResult {
  std::vector<BVector> facets;     // not a nonnegative combination of the others
  std::vector<BVector> redundant;
};

/// Each b is tested against all other members of the list (not against a
/// shrinking list), so the partition does not depend on input order.
IrredundancyResult irredundancy_filter(const std::vector<BVector>& incident);

/// Lexicographically largest permutation of b, i.e. entries sorted descending.
BVector canonical_bvector(const BVector& b);

}  // namespace hypermet
