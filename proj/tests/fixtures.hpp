#pragma once
// Explicit point sets of classical Delaunay polytopes.

#include <algorithm>
#include <vector>

#include "hypermet/rational.hpp"

namespace fixtures {

using hypermet::Rational;
using hypermet::RatVector;

/// {0,1}^k.
inline std::vector<RatVector> cube_points(std::size_t k) {
  std::vector<RatVector> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    RatVector p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = (mask >> i) & 1;
    out.push_back(p);
  }
  return out;
}

/// The 56 vertices of the Gosset polytope 3_21 (Delaunay cell of E7): all
/// permutations of (-3,-3,1^6)/4 and (3,3,-1^6)/4 in the hyperplane Σx = 0.
inline std::vector<RatVector> gosset_points() {
  std::vector<RatVector> out;
  for (int sign : {1, -1}) {
    std::vector<int> v = {-3, -3, 1, 1, 1, 1, 1, 1};
    for (auto& x : v) x *= sign;
    std::sort(v.begin(), v.end());
    do {
      RatVector p;
      for (int x : v) p.push_back(Rational(x, 4));
      out.push_back(p);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational dist2(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

/// The 27 vertices of the Schläfli polytope 2_21 (Delaunay cell of E6): the
/// Gosset vertices at squared distance 2 from a fixed Gosset vertex.
inline std::vector<RatVector> schlafli_points() {
  auto g = gosset_points();
  std::vector<RatVector> out;
  for (const auto& p : g)
    if (dist2(p, g[0]) == 2) out.push_back(p);
  return out;
}

}  // namespace fixtures
