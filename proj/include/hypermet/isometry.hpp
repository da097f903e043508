#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermet/polytope.hpp"

namespace hypermet {

/// Complete graph on the vertices, each pair colored by its squared distance.
struct ColoredGraph {
  std::size_t m = 0;
  RatVector palette;                        // distinct off-diagonal distances, increasing
  std::vector<std::vector<std::uint32_t>> color;  // m×m; diagonal holds palette.size()
};

ColoredGraph colored_graph(const std::vector<RatVector>& distances);
/// With `projective`, distances are first divided by the smallest nonzero
/// one, so polytopes on the same ray compare equal.
ColoredGraph distance_colored_graph(const DelaunayPolytope& p, bool projective = false);

/// perm[i] = image of vertex i.
using Permutation = std::vector<std::size_t>;

/// Some color-preserving bijection g1 → g2, verified entry by entry.
std::optional<Permutation> find_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2);
std::optional<Permutation> are_isomorphic(const DelaunayPolytope& a, const DelaunayPolytope& b, bool projective = false);

struct PermGroup {
  std::vector<Permutation> generators;
  Integer order;
  std::vector<std::size_t> base;          // stabilizer chain base points
  std::vector<std::size_t> orbit_sizes;   // |orbit of base[k] under the stabilizer of base[0..k)|
};

PermGroup automorphism_group(const ColoredGraph& g);
PermGroup automorphism_group(const DelaunayPolytope& p);

/// Orbit of a point under the group generated by `gens`, sorted.
std::vector<std::size_t> orbit(const std::vector<Permutation>& gens, std::size_t point);

/// 1-skeleton: u ~ v iff [u, v] is an edge of the polytope. Decided by LP:
/// the midpoint of [u, v] admits no convex representation with positive
/// weight outside {u, v}. Returns the adjacency matrix.
std::vector<std::vector<bool>> skeleton_graph(const DelaunayPolytope& p);

}  // namespace hypermet
