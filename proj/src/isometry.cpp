#include "hypermet/isometry.hpp"

#include <algorithm>
#include <map>

#include "hypermet/error.hpp"
#include "hypermet/lp.hpp"

namespace hypermet {

ColoredGraph colored_graph(const std::vector<RatVector>& distances) {
  ColoredGraph g;
  g.m = distances.size();
  for (std::size_t i = 0; i < g.m; ++i) {
    if (distances[i].size() != g.m) throw Error(ErrorCode::DimensionMismatch, "distance matrix is not square");
    for (std::size_t j = i + 1; j < g.m; ++j) g.palette.push_back(distances[i][j]);
  }
  std::sort(g.palette.begin(), g.palette.end());
  g.palette.erase(std::unique(g.palette.begin(), g.palette.end()), g.palette.end());
  const auto diag = static_cast<std::uint32_t>(g.palette.size());
  g.color.assign(g.m, std::vector<std::uint32_t>(g.m, diag));
  for (std::size_t i = 0; i < g.m; ++i)
    for (std::size_t j = 0; j < g.m; ++j) {
      if (i == j) continue;
      if (distances[i][j] != distances[j][i])
        throw Error(ErrorCode::InvalidArgument, "distance matrix is not symmetric");
      g.color[i][j] = static_cast<std::uint32_t>(
          std::lower_bound(g.palette.begin(), g.palette.end(), distances[i][j]) - g.palette.begin());
    }
  return g;
}

ColoredGraph distance_colored_graph(const DelaunayPolytope& p, bool projective) {
  auto d = pairwise_distances(p);
  if (projective && d.size() > 1) {
    Rational low = 0;
    for (const auto& row : d)
      for (const auto& x : row)
        if (x != 0 && (low == 0 || x < low)) low = x;
    if (low != 0)
      for (auto& row : d)
        for (auto& x : row) x /= low;
  }
  return colored_graph(d);
}

namespace {

using Coloring = std::vector<std::uint32_t>;

std::uint32_t color_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Refines c1 on g1 and c2 on g2 in lockstep to the coarsest equitable
// partitions, numbering cells identically. False when the partitions diverge.
bool refine(const ColoredGraph& g1, const ColoredGraph& g2, Coloring& c1, Coloring& c2) {
  const std::size_t m = g1.m;
  std::uint32_t cells = 0;
  std::vector<std::vector<std::uint64_t>> s1(m), s2(m);
  for (;;) {
    auto signature = [&](const ColoredGraph& g, const Coloring& c, std::size_t v, std::vector<std::uint64_t>& s) {
      s.clear();
      s.reserve(m);
      for (std::size_t u = 0; u < m; ++u)
        if (u != v) s.push_back((std::uint64_t{g.color[v][u]} << 32) | c[u]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c[v]);
    };
    for (std::size_t v = 0; v < m; ++v) {
      signature(g1, c1, v, s1[v]);
      signature(g2, c2, v, s2[v]);
    }
    std::vector<const std::vector<std::uint64_t>*> all;
    for (std::size_t v = 0; v < m; ++v) {
      all.push_back(&s1[v]);
      all.push_back(&s2[v]);
    }
    std::sort(all.begin(), all.end(), [](auto* a, auto* b) { return *a < *b; });
    all.erase(std::unique(all.begin(), all.end(), [](auto* a, auto* b) { return *a == *b; }), all.end());
    auto id = [&](const std::vector<std::uint64_t>& s) {
      return static_cast<std::uint32_t>(
          std::lower_bound(all.begin(), all.end(), &s, [](auto* a, auto* b) { return *a < *b; }) - all.begin());
    };
    std::vector<std::size_t> h1(all.size()), h2(all.size());
    for (std::size_t v = 0; v < m; ++v) {
      c1[v] = id(s1[v]);
      c2[v] = id(s2[v]);
      ++h1[c1[v]];
      ++h2[c2[v]];
    }
    if (h1 != h2) return false;
    auto now = static_cast<std::uint32_t>(all.size());
    if (now == cells) return true;
    cells = now;
  }
}

bool same_palette(const ColoredGraph& a, const ColoredGraph& b) { return a.m == b.m && a.palette == b.palette; }

class IsoSearch {
 public:
  IsoSearch(const ColoredGraph& g1, const ColoredGraph& g2) : g1_(g1), g2_(g2) {}

  std::optional<Permutation> run(Coloring c1, Coloring c2) {
    if (!refine(g1_, g2_, c1, c2)) return std::nullopt;
    const std::size_t m = g1_.m;
    std::vector<std::size_t> size(color_count(c1));
    for (auto x : c1) ++size[x];
    std::size_t target = size.size();
    for (std::size_t k = 0; k < size.size(); ++k)
      if (size[k] > 1 && (target == size.size() || size[k] < size[target])) target = k;
    if (target == size.size()) {
      Permutation perm(m);
      std::vector<std::size_t> where(size.size());
      for (std::size_t u = 0; u < m; ++u) where[c2[u]] = u;
      for (std::size_t v = 0; v < m; ++v) perm[v] = where[c1[v]];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (g1_.color[i][j] != g2_.color[perm[i]][perm[j]]) return std::nullopt;
      return perm;
    }
    std::size_t v = 0;
    while (c1[v] != target) ++v;
    const auto fresh = static_cast<std::uint32_t>(size.size());
    for (std::size_t u = 0; u < m; ++u) {
      if (c2[u] != target) continue;
      Coloring d1 = c1, d2 = c2;
      d1[v] = fresh;
      d2[u] = fresh;
      if (auto p = run(std::move(d1), std::move(d2))) return p;
    }
    return std::nullopt;
  }

 private:
  const ColoredGraph& g1_;
  const ColoredGraph& g2_;
};

}  // namespace

std::optional<Permutation> find_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (!same_palette(g1, g2)) return std::nullopt;
  return IsoSearch(g1, g2).run(Coloring(g1.m, 0), Coloring(g2.m, 0));
}

std::optional<Permutation> are_isomorphic(const DelaunayPolytope& a, const DelaunayPolytope& b, bool projective) {
  return find_isomorphism(distance_colored_graph(a, projective), distance_colored_graph(b, projective));
}

std::vector<std::size_t> orbit(const std::vector<Permutation>& gens, std::size_t point) {
  std::vector<std::size_t> out = {point};
  std::vector<bool> seen(gens.empty() ? point + 1 : gens[0].size(), false);
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      std::size_t y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup automorphism_group(const ColoredGraph& g) {
  PermGroup group;
  group.order = 1;
  IsoSearch search(g, g);
  Coloring c(g.m, 0);
  for (;;) {
    Coloring c2 = c;
    refine(g, g, c, c2);
    std::vector<std::size_t> size(color_count(c));
    for (auto x : c) ++size[x];
    std::size_t target = size.size();
    for (std::size_t k = 0; k < size.size(); ++k)
      if (size[k] > 1 && (target == size.size() || size[k] < size[target])) target = k;
    if (target == size.size()) break;

    std::size_t beta = 0;
    while (c[beta] != target) ++beta;
    const auto fresh = static_cast<std::uint32_t>(size.size());
    std::vector<Permutation> level;
    std::vector<bool> in_orbit(g.m, false);
    in_orbit[beta] = true;
    for (std::size_t gamma = 0; gamma < g.m; ++gamma) {
      if (c[gamma] != target || in_orbit[gamma]) continue;
      Coloring d1 = c, d2 = c;
      d1[beta] = fresh;
      d2[gamma] = fresh;
      if (auto p = search.run(std::move(d1), std::move(d2))) {
        level.push_back(*p);
        group.generators.push_back(std::move(*p));
        for (auto x : orbit(level, beta)) in_orbit[x] = true;
      }
    }
    std::size_t orbit_size = static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), true));
    group.base.push_back(beta);
    group.orbit_sizes.push_back(orbit_size);
    group.order *= static_cast<unsigned long>(orbit_size);
    c[beta] = fresh;
  }
  return group;
}

PermGroup automorphism_group(const DelaunayPolytope& p) { return automorphism_group(distance_colored_graph(p)); }

std::vector<std::vector<bool>> skeleton_graph(const DelaunayPolytope& p) {
  const std::size_t m = p.vertex_count(), n = p.n();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  // Columns: one weight per vertex. Rows: the n coordinates, then Σλ = 1.
  RatMatrix a(n + 1, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) a(i, k) = p.vertices[k][i + 1];
    a(n, k) = 1;
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      RatVector mid(n + 1);
      for (std::size_t i = 0; i < n; ++i) mid[i] = Rational(p.vertices[u][i + 1] + p.vertices[v][i + 1], 2);
      mid[n] = 1;
      for (auto& x : mid) x.canonicalize();
      LPProblem lp = LPProblem::standard(a, mid);
      RatVector cost(m, Rational(-1));
      cost[u] = cost[v] = 0;
      lp.objective = cost;
      auto r = lp_feasible(lp);
      adj[u][v] = adj[v][u] = (r.status == LPStatus::Feasible && r.value == 0);
    }
  return adj;
}

}  // namespace hypermet
