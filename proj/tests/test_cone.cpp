#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hypermet/cone.hpp"
#include "hypermet/error.hpp"
#include "oracles.hpp"

using namespace hypermet;

namespace {

std::vector<IntVector> functionals(const std::vector<BVector>& bs) {
  std::vector<IntVector> out;
  for (auto& b : bs) out.push_back(functional_of(b));
  return out;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Positive primitive scaling, computed without the library helpers.
IntVector scale_down(IntVector v) {
  Integer g = 0;
  for (auto& x : v) g = gcd(g, x);
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

bool feasible(const std::vector<IntVector>& rows, const IntVector& x) {
  for (auto& f : rows) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
    if (s > 0) return false;
  }
  return true;
}

// Extreme rays of a 3-dimensional cone: cross products of constraint pairs.
std::vector<IntVector> rays3_brute(const std::vector<IntVector>& rows) {
  std::set<IntVector> out;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const auto &f = rows[a], &g = rows[b];
      IntVector c = {f[1] * g[2] - f[2] * g[1], f[2] * g[0] - f[0] * g[2], f[0] * g[1] - f[1] * g[0]};
      if (c == IntVector{0, 0, 0}) continue;
      for (int sign : {1, -1}) {
        IntVector x = c;
        for (auto& t : x) t *= sign;
        if (feasible(rows, x)) out.insert(scale_down(x));
      }
    }
  return {out.begin(), out.end()};
}

Integer idot(const IntVector& f, const IntVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
  return s;
}

std::vector<IntVector> tight_rows(const std::vector<IntVector>& rows, const IntVector& x) {
  std::vector<IntVector> t;
  for (auto& f : rows)
    if (idot(f, x) == 0) t.push_back(f);
  return t;
}

std::size_t oracle_rank(const std::vector<IntVector>& rows, std::size_t dim) {
  // Largest nonsingular Gram submatrix of the row set: rank(A) = rank(A·Aᵀ).
  if (rows.empty()) return 0;
  oracle::Dense g(rows.size(), std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) g[i][j] = idot(rows[i], rows[j]);
  (void)dim;
  // Greedy: add rows while the Gram determinant stays nonzero.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    keep.push_back(i);
    oracle::Dense sub(keep.size(), std::vector<Rational>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b) sub[a][b] = g[keep[a]][keep[b]];
    if (oracle::det(sub) == 0) keep.pop_back();
  }
  return keep.size();
}

// Extreme rays in any dimension: kernels of (dim-1)-subsets of rows.
std::vector<IntVector> rays_brute(const std::vector<IntVector>& rows, std::size_t dim) {
  std::set<IntVector> out;
  std::vector<std::size_t> idx(dim - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == dim - 1) {
      std::vector<RatVector> sel;
      for (auto i : idx) sel.push_back(to_rational(rows[i]));
      auto ns = nullspace(RatMatrix::from_rows(sel, dim));
      if (ns.size() != 1) return;
      IntVector k = primitive(ns[0]);
      for (int sign : {1, -1}) {
        IntVector x = k;
        for (auto& t : x) t *= sign;
        if (feasible(rows, x)) out.insert(x);
      }
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

// Neighbors by the algebraic test: common tight rows of rank dim - 2.
std::vector<IntVector> neighbors_brute(const std::vector<IntVector>& rows, const std::vector<IntVector>& rays,
                                       const IntVector& e, std::size_t dim) {
  std::vector<IntVector> out;
  auto te = tight_rows(rows, e);
  for (auto& r : rays) {
    if (r == e) continue;
    std::vector<IntVector> common;
    for (auto& f : te)
      if (idot(f, r) == 0) common.push_back(f);
    if (oracle_rank(common, dim) + 2 == dim) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> random_cone3(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ab(-5, 5), c(1, 3);
  for (;;) {
    std::vector<IntVector> rows;
    std::size_t k = 3 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(iv({ab(rng), ab(rng), -c(rng)}));
    auto rays = rays3_brute(rows);
    // Pointed with a bounded slice: the rays span and have positive z.
    if (rays.size() < 3) continue;
    if (oracle_rank(rows, 3) < 3) continue;
    bool bounded = std::all_of(rays.begin(), rays.end(), [](auto& r) { return r[2] > 0; });
    if (bounded) return rows;
  }
}

}  // namespace

TEST_CASE("functional_of examples") {
  CHECK(functional_of(BVector{1, 1, -1}) == iv({1, -1, -1}));
  CHECK(functional_of(BVector{1, 0, 0}) == iv({0, 0, 0}));
  CHECK(functional_of(BVector{2, -1, 0}) == iv({-2, 0, 0}));
  DistanceVector d(2, {3, 5, 7});
  for (auto& b : {BVector{2, -1, 0}, BVector{1, 1, -1}, BVector{-3, 2, 2}})
    CHECK(dot(functional_of(b), d.entries()) == hyp_value(b, d));
}

TEST_CASE("cone system deduplicates by functional") {
  ConeSystem c(2, {BVector{0, 1, 0}, BVector{1, 0, 0}, BVector{1, 1, -1}, BVector{1, 1, -1}});
  CHECK(c.size() == 2);
  CHECK(c.inequalities()[0] == BVector{0, 1, 0});
  CHECK(c.add({BVector{0, 0, 1}, BVector{1, -1, 1}}) == 1);
  CHECK(c.contains(BVector{1, -1, 1}));
  CHECK_THROWS_AS(c.add({BVector{1, 0}}), Error);
}

TEST_CASE("incident_subset examples") {
  ConeSystem met3(2, triangle_bvectors(2));
  // d = (1,1,2): only d12 ≤ d01 + d02 is tight.
  auto inc = incident_subset(met3, {1, 1, 2});
  std::vector<BVector> expected;
  for (auto& b : triangle_bvectors(2))
    if (hyp_value(b, DistanceVector(2, {1, 1, 2})) == 0) expected.push_back(b);
  CHECK(inc == expected);
  REQUIRE(inc.size() == 1);
  CHECK(inc[0] == BVector{-1, 1, 1});
  CHECK(incident_subset(met3, {2, 2, 2}).empty());
  // A point on the facet d01 = d02 + d12 only.
  auto facet = incident_subset(met3, {3, 1, 2});
  REQUIRE(facet.size() == 1);
  CHECK(facet[0] == BVector{1, 1, -1});
  CHECK(hyp_value(facet[0], DistanceVector(2, {3, 1, 2})) == 0);
}

TEST_CASE("is_extreme_ray examples") {
  auto seg = is_extreme_ray(std::vector<IntVector>{}, {4});
  CHECK(seg.extreme);
  CHECK(seg.rank == 0);
  ConeSystem met3(2, triangle_bvectors(2));
  auto cut = is_extreme_ray(met3, {0, 1, 1});
  CHECK(cut.extreme);
  CHECK(cut.rank == 2);
  auto inner = is_extreme_ray(met3, {1, 1, 1});
  CHECK_FALSE(inner.extreme);
  CHECK(inner.rank == 0);
  CHECK_THROWS_AS(is_extreme_ray(met3, {3, 1, 1}), Error);
}

TEST_CASE("adjacent_rays on MET3") {
  ConeSystem met3(2, triangle_bvectors(2));
  CHECK(adjacent_rays(met3, iv({0, 1, 1})) == std::vector<IntVector>{iv({1, 0, 1}), iv({1, 1, 0})});
  CHECK(adjacent_rays(met3, iv({1, 1, 0})) == std::vector<IntVector>{iv({0, 1, 1}), iv({1, 0, 1})});
  CHECK(extreme_rays(met3.functionals(), 3) == rays3_brute(met3.functionals()));
  try {
    adjacent_rays(met3, iv({1, 1, 1}));
    FAIL("expected not-extreme");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotExtreme);
  }
}

TEST_CASE("adjacent_rays on simplicial and four-facet cones") {
  // Nonnegative orthant written as -x_i ≤ 0.
  std::vector<IntVector> orthant = {iv({-1, 0, 0}), iv({0, -1, 0}), iv({0, 0, -1})};
  CHECK(adjacent_rays(orthant, iv({1, 0, 0})) == std::vector<IntVector>{iv({0, 0, 1}), iv({0, 1, 0})});
  // x_i ≥ 0 and x1 + x2 - x3 ≥ 0: four facets, four rays, each with two neighbors.
  std::vector<IntVector> four = {iv({-1, 0, 0}), iv({0, -1, 0}), iv({0, 0, -1}), iv({-1, -1, 1})};
  auto rays = rays3_brute(four);
  CHECK(rays.size() == 4);
  CHECK(extreme_rays(four, 3) == rays);
  for (auto& r : rays) {
    auto nb = adjacent_rays(four, r);
    CHECK(nb.size() == 2);
    CHECK(nb == neighbors_brute(four, rays, r, 3));
  }
}

TEST_CASE("adjacent_rays agrees with brute force on random 3-dimensional cones") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    auto rows = random_cone3(rng);
    auto rays = rays3_brute(rows);
    CHECK(extreme_rays(rows, 3) == rays);
    for (auto& e : rays) {
      auto nb = adjacent_rays(rows, e);
      CHECK(nb == neighbors_brute(rows, rays, e, 3));
      CHECK(nb.size() == 2);
    }
  }
}

TEST_CASE("double description agrees with brute force in higher dimension") {
  ConeSystem met4(3, triangle_bvectors(3));
  auto rays = extreme_rays(met4.functionals(), 6);
  CHECK(rays == rays_brute(met4.functionals(), 6));
  CHECK(rays.size() == 7);  // the nonzero cut semimetrics on 4 points
  for (auto& e : rays) {
    auto nb = adjacent_rays(met4, e);
    CHECK(nb == neighbors_brute(met4.functionals(), rays, e, 6));
    for (auto& r : nb) {
      CHECK(is_extreme_ray(met4, to_rational(r)).extreme);
      std::vector<IntVector> common;
      for (auto& f : met4.functionals())
        if (!is_zero(f) && idot(f, e) == 0 && idot(f, r) == 0) common.push_back(f);
      CHECK(rank(common, 6) == 4);
    }
  }

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> e(-3, 3);
  int tested = 0;
  while (tested < 15) {
    std::size_t dim = 4;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < 7; ++i) {
      IntVector f(dim);
      for (auto& x : f) x = e(rng);
      f[dim - 1] = -1 - (rng() % 3);
      rows.push_back(f);
    }
    auto brute = rays_brute(rows, dim);
    bool pointed = oracle_rank(rows, dim) == dim && brute.size() > dim;
    if (!pointed) continue;
    ++tested;
    CHECK(extreme_rays(rows, dim) == brute);
    for (auto& r : brute) CHECK(adjacent_rays(rows, r) == neighbors_brute(rows, brute, r, dim));
  }
}

TEST_CASE("extreme_rays rejects non-pointed cones") {
  try {
    extreme_rays({iv({1, 0})}, 2);
    FAIL("expected not-pointed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPointed);
  }
}

TEST_CASE("local cone reuse matches recomputation") {
  ConeSystem met4(3, triangle_bvectors(3));
  IntVector cut = iv({1, 1, 1, 0, 0, 0});  // δ({0})
  LocalCone local(met4.functionals(), cut);
  ConeSystem grown = met4;
  grown.add({BVector{1, 1, 1, -2}, BVector{-1, 1, 1, 0}});
  CHECK(local.neighbors(grown.functionals()) == adjacent_rays(grown, cut));
}

TEST_CASE("irredundancy_filter") {
  // f(2,-1,0,0) = f(-1,1,1,0) + f(1,-1,1,0).
  std::vector<BVector> list = {BVector{-1, 1, 1, 0}, BVector{1, -1, 1, 0}, BVector{2, -1, 0, 0}};
  REQUIRE(functional_of(list[2]) == [&] {
    IntVector s = functional_of(list[0]);
    auto g = functional_of(list[1]);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
    return s;
  }());
  auto r = irredundancy_filter(list);
  CHECK(r.redundant == std::vector<BVector>{BVector{2, -1, 0, 0}});
  CHECK(r.facets == std::vector<BVector>{BVector{-1, 1, 1, 0}, BVector{1, -1, 1, 0}});

  auto tri = triangle_bvectors(3);
  std::vector<BVector> indep(tri.begin(), tri.begin() + 3);
  REQUIRE(rank(functionals(indep), 6) == 3);
  CHECK(irredundancy_filter(indep).facets == indep);

  // Order independence and idempotence.
  auto shuffled = list;
  std::reverse(shuffled.begin(), shuffled.end());
  auto r2 = irredundancy_filter(shuffled);
  std::sort(r2.facets.begin(), r2.facets.end());
  CHECK(r2.facets == r.facets);
  CHECK(r2.redundant == r.redundant);
  CHECK(irredundancy_filter(r.facets).facets == r.facets);
}

TEST_CASE("canonical_bvector") {
  CHECK(canonical_bvector(BVector{-1, 1, 1}) == BVector{1, 1, -1});
  CHECK(canonical_bvector(BVector{0, 1, -1, 1}) == BVector{1, 1, 0, -1});
  std::set<BVector> orbits;
  for (auto& b : triangle_bvectors(3)) orbits.insert(canonical_bvector(b));
  CHECK(orbits.size() == 1);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int t = 0; t < 200; ++t) {
    IntVector v(5);
    for (std::size_t i = 0; i < 4; ++i) v[i] = e(rng);
    v[4] = 1 - (v[0] + v[1] + v[2] + v[3]);
    BVector b(v);
    BVector c = canonical_bvector(b);
    CHECK(canonical_bvector(c) == c);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(canonical_bvector(BVector(v)) == c);
  }
}
