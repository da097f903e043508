#pragma once

#include <cstddef>
#include <vector>

#include "hypermet/hypermetric.hpp"

namespace hypermet {

/// A Delaunay polytope in intrinsic form: the mutual squared distances of an
/// affine basis v_0..v_n, and every vertex as the b-vector with vertex = Σ b_i v_i.
struct DelaunayPolytope {
  DistanceVector basis_d;
  std::vector<BVector> vertices;  // sorted; contains the n+1 unit vectors
  RatMatrix gram;
  Circumsphere sphere;

  std::size_t n() const noexcept { return basis_d.n(); }
  std::size_t vertex_count() const noexcept { return vertices.size(); }
};

/// vertices = Ann(d). Throws NotHypermetric (some lattice point strictly
/// inside the circumsphere) or DegenerateGram.
DelaunayPolytope polytope_from_basis(const DistanceVector& d, const EnumerationBudget& budget = {});

struct PolytopeExtremeness {
  bool extreme = false;
  std::size_t rank = 0;  // rank of the functionals of Ann(basis_d)
};

/// Extreme iff the vertex functionals have rank C(n+1,2) - 1. Tight triangle
/// inequalities are members of Ann(d) and need no separate treatment.
PolytopeExtremeness is_extreme_polytope(const DelaunayPolytope& p);

/// (n+1)(n+2)/2 - 1.
std::size_t min_vertex_bound(std::size_t n);

/// Squared distance between vertices as (b - b')ᵀĜ(b - b').
Rational vertex_distance(const DelaunayPolytope& p, const BVector& a, const BVector& b);
std::vector<RatVector> pairwise_distances(const DelaunayPolytope& p);

/// basis_d as a point of pair-space.
RatVector as_ray(const DelaunayPolytope& p);

/// Whether the integer row vectors extend to a basis of Zⁿ (all elementary
/// divisors equal to 1).
bool is_primitive_system(const std::vector<IntVector>& rows, std::size_t cols);

/// Integer row echelon form by unimodular row operations (nonzero rows only).
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t cols);

/// Index sets S (increasing, size n+1) whose difference vectors form a basis
/// of the vertex lattice. Enumeration is lexicographic; `limit` caps the
/// number returned (0 = all).
std::vector<std::vector<std::size_t>> find_affine_bases(const DelaunayPolytope& p, std::size_t limit = 0);

/// The same polytope described through another affine basis (vertex indices).
DelaunayPolytope rebase(const DelaunayPolytope& p, const std::vector<std::size_t>& basis);

/// Loader for explicit vertex coordinates: recovers the vertex lattice, picks
/// the first affine basis and checks that Ann of its distances reproduces
/// exactly the given points. Throws NotHypermetric, DegenerateGram, or
/// InvalidArgument (no affine basis, or the points are not a Delaunay polytope).
DelaunayPolytope polytope_from_coordinates(const std::vector<RatVector>& points, const EnumerationBudget& budget = {});

}  // namespace hypermet
