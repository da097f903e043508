#include "hypermet/polytope.hpp"

#include <algorithm>
#include <functional>

#include "hypermet/cone.hpp"
#include "hypermet/error.hpp"

namespace hypermet {

DelaunayPolytope polytope_from_basis(const DistanceVector& d, const EnumerationBudget& budget) {
  if (d.has_zero_entry()) throw Error(ErrorCode::DegenerateGram, "coincident basis points");
  DelaunayPolytope p;
  p.basis_d = d;
  p.gram = gram_of(d);
  p.sphere = circumsphere(p.gram);
  if (auto w = cvp_strictly_inside({p.gram, p.sphere.alpha, p.sphere.radius2}, budget))
    throw Error(ErrorCode::NotHypermetric,
                "violated by b = " + format_bvector(BVector::from_offsets(0, *w)) + "; the circumsphere is not empty");
  p.vertices = ann(d, budget);
  return p;
}

PolytopeExtremeness is_extreme_polytope(const DelaunayPolytope& p) {
  const std::size_t dim = DistanceVector::pair_count(p.n());
  std::vector<IntVector> rows;
  for (const auto& b : p.vertices) {
    if (b.is_unit()) continue;
    rows.push_back(functional_of(b));
  }
  PolytopeExtremeness e;
  e.rank = rows.empty() ? 0 : rank(rows, dim);
  e.extreme = e.rank + 1 == dim;
  return e;
}

std::size_t min_vertex_bound(std::size_t n) { return (n + 1) * (n + 2) / 2 - 1; }

Rational vertex_distance(const DelaunayPolytope& p, const BVector& a, const BVector& b) {
  IntVector diff(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) diff[i] = a[i + 1] - b[i + 1];
  return quadratic(p.gram, diff);
}

std::vector<RatVector> pairwise_distances(const DelaunayPolytope& p) {
  const std::size_t m = p.vertices.size();
  std::vector<RatVector> out(m, RatVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out[i][j] = out[j][i] = vertex_distance(p, p.vertices[i], p.vertices[j]);
  return out;
}

RatVector as_ray(const DelaunayPolytope& p) { return p.basis_d.entries(); }

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      // Smallest nonzero |entry| in column c at or below r becomes the pivot.
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (std::size_t j = c; j < cols; ++j) rows[r][j] = -rows[r][j];
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

bool is_primitive_system(const std::vector<IntVector>& rows, std::size_t cols) {
  const std::size_t k = rows.size();
  if (k == 0) return true;
  if (k > cols) return false;
  std::vector<IntVector> t(cols, IntVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  auto h = hermite_rows(std::move(t), k);
  if (h.size() < k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (h[i][i] != 1) return false;
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> affine_bases_of(const std::vector<IntVector>& w, std::size_t n,
                                                      std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = w.size();
  std::vector<std::size_t> chosen;
  std::vector<IntVector> diffs;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == n + 1) {
      out.push_back(chosen);
      return limit != 0 && out.size() >= limit;
    }
    for (std::size_t i = start; i + (n + 1 - chosen.size()) <= m; ++i) {
      chosen.push_back(i);
      bool ok = true;
      if (chosen.size() > 1) {
        IntVector d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = w[i][k] - w[chosen[0]][k];
        diffs.push_back(std::move(d));
        ok = is_primitive_system(diffs, n);
      }
      if (ok && extend(i + 1)) return true;
      if (chosen.size() > 1) diffs.pop_back();
      chosen.pop_back();
    }
    return false;
  };
  extend(0);
  return out;
}

std::vector<IntVector> offsets(const DelaunayPolytope& p) {
  std::vector<IntVector> w;
  for (const auto& b : p.vertices) w.emplace_back(b.entries().begin() + 1, b.entries().end());
  return w;
}

}  // namespace

std::vector<std::vector<std::size_t>> find_affine_bases(const DelaunayPolytope& p, std::size_t limit) {
  return affine_bases_of(offsets(p), p.n(), limit);
}

DelaunayPolytope rebase(const DelaunayPolytope& p, const std::vector<std::size_t>& basis) {
  if (basis.size() != p.n() + 1) throw Error(ErrorCode::DimensionMismatch, "a basis has n + 1 vertices");
  RatVector e;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      e.push_back(vertex_distance(p, p.vertices.at(basis[a]), p.vertices.at(basis[b])));
  return polytope_from_basis(DistanceVector(p.n(), std::move(e)));
}

DelaunayPolytope polytope_from_coordinates(const std::vector<RatVector>& points, const EnumerationBudget& budget) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two points");
  const std::size_t k = points[0].size();
  Integer den = 1;
  for (const auto& p : points) {
    if (p.size() != k) throw Error(ErrorCode::DimensionMismatch, "points of different lengths");
    for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector u(k);
    for (std::size_t j = 0; j < k; ++j) {
      Rational x = (points[i][j] - points[0][j]) * den;
      u[j] = x.get_num();
    }
    diffs.push_back(std::move(u));
  }
  // Lattice generated by the differences, then integer coordinates over it.
  auto h = hermite_rows(diffs, k);
  const std::size_t n = h.size();
  if (n == 0) throw Error(ErrorCode::DegenerateGram, "all points coincide");
  RatMatrix ht(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) ht(j, i) = h[i][j];
  std::vector<IntVector> w = {IntVector(n)};
  for (const auto& u : diffs) {
    auto sol = solve_linear(ht, to_rational(u));
    IntVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = sol.particular[i].get_num();
    w.push_back(std::move(c));
  }

  auto bases = affine_bases_of(w, n, 1);
  if (bases.empty()) throw Error(ErrorCode::InvalidArgument, "no affine basis among the given points");
  const auto& s = bases[0];
  auto dist = [&](std::size_t a, std::size_t b) {
    Rational t = 0;
    for (std::size_t j = 0; j < k; ++j) t += (points[a][j] - points[b][j]) * (points[a][j] - points[b][j]);
    return t;
  };
  RatVector e;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) e.push_back(dist(s[a], s[b]));
  DelaunayPolytope p = polytope_from_basis(DistanceVector(n, std::move(e)), budget);

  // Each point in the chosen affine basis must be a vertex, and nothing else.
  RatMatrix basis_cols(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) basis_cols(r, c) = w[s[c + 1]][r] - w[s[0]][r];
  std::vector<BVector> mapped;
  for (const auto& x : w) {
    RatVector rel(n);
    for (std::size_t r = 0; r < n; ++r) rel[r] = x[r] - w[s[0]][r];
    auto sol = solve_linear(basis_cols, rel);
    IntVector c;
    for (const auto& q : sol.particular) c.push_back(q.get_num());
    mapped.push_back(BVector::from_offsets(0, c));
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != p.vertices)
    throw Error(ErrorCode::InvalidArgument, "the points are not the vertex set of a Delaunay polytope (" +
                                                std::to_string(points.size()) + " given, " +
                                                std::to_string(p.vertices.size()) + " on the empty sphere)");
  return p;
}

}  // namespace hypermet
