#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hypermet/polytope.hpp"

namespace hypermet {

// All formats are whitespace-separated exact tokens (integers or p/q).
// Parse errors carry ErrorCode::Parse and name the line and the token.

/// `n`, then the C(n+1,2) distances d01 d02 … d0n d12 … d(n-1)n.
DistanceVector read_distance_vector(std::istream& in);
void write_distance_vector(std::ostream& out, const DistanceVector& d);

/// `n`, then n rows of n entries. Symmetry is checked.
RatMatrix read_gram(std::istream& in);

/// Either
///   n / the basis distances (as in a distance file) / m / m rows of n+1 integers
/// or
///   coordinates k / m / m rows of k rationals.
/// In the first form the listed b-vectors must be exactly Ann of the basis.
DelaunayPolytope read_polytope(std::istream& in, const EnumerationBudget& budget = {});
void write_polytope(std::ostream& out, const DelaunayPolytope& p);

/// "1/2,-3,0" → (1/2, -3, 0).
RatVector parse_rational_list(std::string_view text);

DistanceVector load_distance_vector(const std::string& path);
RatMatrix load_gram(const std::string& path);
DelaunayPolytope load_polytope(const std::string& path, const EnumerationBudget& budget = {});

}  // namespace hypermet
