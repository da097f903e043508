#pragma once

#include <optional>
#include <vector>

#include "hypermet/lattice.hpp"
#include "hypermet/matrix.hpp"

namespace hypermet {

/// Squared distances d_ij, 0 ≤ i < j ≤ n, on the n+1 points v_0..v_n,
/// stored in row order d01 d02 … d0n d12 … d(n-1)n.
class DistanceVector {
 public:
  DistanceVector() = default;
  DistanceVector(std::size_t n, RatVector entries);

  static std::size_t pair_count(std::size_t n) { return (n + 1) * n / 2; }
  static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n() const noexcept { return n_; }
  std::size_t points() const noexcept { return n_ + 1; }
  const RatVector& entries() const noexcept { return entries_; }

  /// d(i, j) for any i, j ≤ n; zero on the diagonal.
  Rational operator()(std::size_t i, std::size_t j) const;

  DistanceVector scaled(const Rational& factor) const;
  /// The distance vector of the points `indices` (in that order).
  DistanceVector restricted(const std::vector<std::size_t>& indices) const;

  bool nonnegative() const;
  bool has_zero_entry() const;

  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;

 private:
  std::size_t n_ = 0;
  RatVector entries_;
};

/// Integer vector with Σ b_i = 1; denotes the inequality H(b)d ≤ 0 and,
/// for a polytope, the vertex Σ b_i v_i.
class BVector {
 public:
  BVector() = default;
  /// Throws Error(SumOfBNotOne).
  explicit BVector(IntVector entries);
  BVector(std::initializer_list<long> entries);

  static BVector unit(std::size_t points, std::size_t i);
  /// b = (1 - Σw) at `origin`, w elsewhere (w indexed over the other points).
  static BVector from_offsets(std::size_t origin, const IntVector& w);

  const IntVector& entries() const noexcept { return b_; }
  std::size_t size() const noexcept { return b_.size(); }
  const Integer& operator[](std::size_t i) const { return b_[i]; }
  bool is_unit() const;

  friend bool operator==(const BVector& a, const BVector& b) { return a.b_ == b.b_; }
  friend bool operator<(const BVector& a, const BVector& b) { return a.b_ < b.b_; }

 private:
  IntVector b_;
};

std::string format_bvector(const BVector& b);

/// g_ij = (d_i,o + d_j,o - d_ij)/2 over the points other than `origin`.
RatMatrix gram_of(const DistanceVector& d, std::size_t origin = 0);

struct Circumsphere {
  RatVector alpha;  // c = v_0 + Σ alpha_i (v_i - v_0)
  Rational radius2;
};

/// Solves G·alpha = diag(G)/2. Throws DegenerateGram unless G is positive definite.
Circumsphere circumsphere(const RatMatrix& gram);

/// H(b)d = Σ_{i<j} b_i b_j d_ij. Throws DimensionMismatch.
Rational hyp_value(const BVector& b, const DistanceVector& d);

/// Both sides of Σ_{i,j} b_i b_j d_ij = 2(r² - ‖Σ b_i v_i - c‖²), computed
/// independently: `double_sum` from the distances, `sphere_side` through the
/// Gram matrix and circumsphere.
struct SphereIdentity {
  Rational double_sum;
  Rational sphere_side;
};

SphereIdentity sphere_identity_check(const BVector& b, const DistanceVector& d);

/// {b : Σb = 1, H(b)d = 0}, sorted. Requires a positive definite Gram and
/// no coincident points (DegenerateGram otherwise).
std::vector<BVector> ann(const DistanceVector& d, const EnumerationBudget& budget = {});

struct HypermetricVerdict {
  bool hypermetric = true;
  std::optional<BVector> violation;  // H(violation)d > 0
  std::size_t dimension = 0;         // rank of the Gram matrix
  FormClass form_class = FormClass::PositiveDefinite;
};

/// Separation oracle over all integral b. Semidefinite input is handled by
/// reduction to an integral subfamily; PsdIrreducible when none exists.
HypermetricVerdict is_hypermetric(const DistanceVector& d, const EnumerationBudget& budget = {});

/// Every violated b found by one full enumeration pass (all lattice points
/// strictly inside the sphere when the Gram is positive definite; a single
/// witness otherwise). Empty iff d is hypermetric.
std::vector<BVector> hypermetric_violations(const DistanceVector& d, const EnumerationBudget& budget = {});

/// All distinct permutations of (1, 1, -1, 0, …, 0) on n+1 points, sorted.
std::vector<BVector> triangle_bvectors(std::size_t n);

/// floor(n!·2ⁿ / C(2n, n)).
Integer lovasz_bound(std::size_t n);

/// Exhaustive check over |b_i| ≤ bound; the violation reported is the
/// first in lexicographic order of (b_1, …, b_n).
HypermetricVerdict brute_force_is_hypermetric(const DistanceVector& d, long bound);

}  // namespace hypermet
