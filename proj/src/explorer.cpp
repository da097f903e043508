#include "hypermet/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "hypermet/error.hpp"

namespace hypermet {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Hypermetric: return "HYPERMETRIC";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::PsdIrreducible: return "PSD-IRREDUCIBLE";
    case Verdict::Exhausted: return "BUDGET-EXHAUSTED";
  }
  return "?";
}

ExplorationState initialize(const DelaunayPolytope& p) {
  auto ext = is_extreme_polytope(p);
  if (!ext.extreme)
    throw Error(ErrorCode::NotExtreme, "vertex functionals have rank " + std::to_string(ext.rank) + ", need " +
                                           std::to_string(DistanceVector::pair_count(p.n()) - 1));
  ExplorationState s;
  s.n = p.n();
  std::vector<BVector> f;
  for (const auto& b : p.vertices)
    if (!b.is_unit()) f.push_back(b);
  if (s.n >= 2) {
    auto t = triangle_bvectors(s.n);
    f.insert(f.end(), t.begin(), t.end());
  }
  s.cone = ConeSystem(s.n, f);
  s.ray = primitive(p.basis_d.entries());
  return s;
}

ExplorationState initialize_from_ray(std::size_t n, const IntVector& ray, const std::vector<BVector>& extra) {
  if (ray.size() != DistanceVector::pair_count(n)) throw Error(ErrorCode::DimensionMismatch, "ray length");
  ExplorationState s;
  s.n = n;
  std::vector<BVector> f = n >= 2 ? triangle_bvectors(n) : std::vector<BVector>{};
  f.insert(f.end(), extra.begin(), extra.end());
  s.cone = ConeSystem(n, f);
  s.ray = primitive(ray);
  auto t = is_extreme_ray(s.cone, to_rational(s.ray));
  if (!t.extreme) throw Error(ErrorCode::NotExtreme, "ray has incident rank " + std::to_string(t.rank));
  return s;
}

namespace {

struct Outcome {
  Verdict verdict = Verdict::Hypermetric;
  std::vector<BVector> violations;
};

Outcome test_candidate(std::size_t n, const IntVector& ray, const EnumerationBudget& budget) {
  Outcome o;
  try {
    o.violations = hypermetric_violations(DistanceVector(n, to_rational(ray)), budget);
    o.verdict = o.violations.empty() ? Verdict::Hypermetric : Verdict::Violated;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PsdIrreducible)
      o.verdict = Verdict::PsdIrreducible;
    else if (e.code() == ErrorCode::BudgetExhausted)
      o.verdict = Verdict::Exhausted;
    else
      throw;
  }
  return o;
}

// Runs f(i) for i in [0, count) on `threads` workers; results are indexed,
// so the schedule never affects the outcome.
template <class F>
void parallel_for(std::size_t count, std::size_t threads, F f) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

Neighbor neighbor_polytope(std::size_t n, const IntVector& ray, const EnumerationBudget& budget) {
  Neighbor out;
  out.ray = ray;
  DistanceVector d(n, to_rational(ray));
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i <= n; ++i) {
    bool dup = false;
    for (auto j : distinct)
      if (d(i, j) == 0) dup = true;
    if (!dup) distinct.push_back(i);
  }
  if (distinct.size() < 2) return out;
  DistanceVector dd = d.restricted(distinct);
  const std::size_t m = dd.n();
  RatMatrix g = gram_of(dd);
  out.dimension = rank(g);
  if (out.dimension == m) {
    out.points = distinct;
    out.polytope = polytope_from_basis(dd, budget);
    return out;
  }
  // Rank-deficient: look for an origin and an integral subfamily.
  for (std::size_t origin = 0; origin <= m; ++origin) {
    auto red = psd_reduce(gram_of(dd, origin));
    if (!red) continue;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i <= m; ++i)
      if (i != origin) others.push_back(i);
    std::vector<std::size_t> local = {origin};
    for (auto s : red->subfamily) local.push_back(others[s]);
    for (auto i : local) out.points.push_back(distinct[i]);
    out.polytope = polytope_from_basis(dd.restricted(local), budget);
    return out;
  }
  return out;
}

ExplorationResult explore(ExplorationState& st, const ExploreBudget& budget) {
  ExplorationResult res;
  const auto& fs = [&]() -> const std::vector<IntVector>& { return st.cone.functionals(); };
  LocalCone local(fs(), st.ray, budget.rays);
  std::size_t count = 0;
  std::vector<bool> done, stuck;
  std::vector<IntVector> certified;
  // Largest step bound over F per direction, kept current as F grows.
  std::vector<std::optional<Rational>> step;
  auto raise = [&](std::size_t k, std::size_t from) {
    const auto& f = fs();
    for (std::size_t i = from; i < f.size(); ++i)
      if (auto b = local.step_bound(f[i], k); b && (!step[k] || *b > *step[k])) step[k] = std::move(b);
  };
  auto reset = [&] {
    count = local.directions().size();
    done.assign(count, false);
    stuck.assign(count, false);
    certified.assign(count, {});
    step.assign(count, std::nullopt);
    for (std::size_t k = 0; k < count; ++k) {
      raise(k, 0);
      if (!step[k]) throw Error(ErrorCode::NotPointed, "no inequality is strict at the ray");
    }
    res.unresolved.clear();
  };
  reset();

  for (;;) {
    std::vector<std::size_t> pending;
    for (std::size_t k = 0; k < count; ++k)
      if (!done[k] && !stuck[k]) pending.push_back(k);
    if (pending.empty()) break;
    if (res.iterations >= budget.max_iterations) break;
    ++res.iterations;

    const std::size_t f_size = st.cone.size();
    std::vector<IntVector> rays(pending.size());
    std::vector<Outcome> outcomes(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) rays[i] = local.point(pending[i], *step[pending[i]]);
    parallel_for(pending.size(), budget.threads,
                 [&](std::size_t i) { outcomes[i] = test_candidate(st.n, rays[i], budget.enumeration); });

    std::vector<BVector> violations;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      LogEntry entry{res.iterations, f_size, pending[i], rays[i], outcomes[i].verdict, {}};
      switch (outcomes[i].verdict) {
        case Verdict::Hypermetric:
          done[pending[i]] = true;
          certified[pending[i]] = rays[i];
          break;
        case Verdict::Violated:
          for (auto& b : outcomes[i].violations)
            if (!st.cone.contains(b) && std::find(violations.begin(), violations.end(), b) == violations.end()) {
              violations.push_back(b);
              entry.added.push_back(b);
            }
          break;
        case Verdict::PsdIrreducible:
        case Verdict::Exhausted:
          stuck[pending[i]] = true;
          res.unresolved.push_back(rays[i]);
          break;
      }
      st.log.push_back(std::move(entry));
    }
    if (violations.empty()) continue;
    const std::size_t before = fs().size();
    if (st.cone.add(violations) == 0)
      throw Error(ErrorCode::InvalidArgument, "violated inequalities were already present");
    // An inequality tight at e changes the local cone itself: every
    // direction has to be recomputed and retested.
    bool tight = false;
    for (const auto& b : violations)
      if (dot(functional_of(b), st.ray) == 0) tight = true;
    if (tight) {
      local = LocalCone(fs(), st.ray, budget.rays);
      reset();
    } else {
      for (std::size_t k = 0; k < count; ++k)
        if (!done[k] && !stuck[k]) raise(k, before);
    }
  }

  res.complete = std::all_of(done.begin(), done.end(), [](bool x) { return x; });
  std::vector<IntVector> found;
  for (std::size_t k = 0; k < count; ++k)
    if (done[k]) found.push_back(certified[k]);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& r : found) {
    Neighbor nb = neighbor_polytope(st.n, r, budget.enumeration);
    auto t = is_extreme_ray(st.cone, to_rational(r));
    nb.incident_rank = t.rank;
    nb.extreme_in_cone = t.extreme;
    res.neighbors.push_back(std::move(nb));
  }
  std::sort(res.unresolved.begin(), res.unresolved.end());
  return res;
}

std::vector<IsometryClass> classify_results(const std::vector<DelaunayPolytope>& polytopes) {
  std::vector<IsometryClass> classes;
  std::vector<ColoredGraph> graphs;
  for (const auto& p : polytopes) graphs.push_back(distance_colored_graph(p, true));
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    bool placed = false;
    for (auto& c : classes) {
      const auto& rep = polytopes[c.representative];
      if (rep.n() != polytopes[i].n() || rep.vertex_count() != polytopes[i].vertex_count()) continue;
      if (find_isomorphism(graphs[c.representative], graphs[i])) {
        c.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    IsometryClass c;
    c.representative = i;
    c.members = {i};
    c.vertex_count = polytopes[i].vertex_count();
    c.dimension = polytopes[i].n();
    c.aut_order = automorphism_group(graphs[i]).order;
    c.extreme = is_extreme_polytope(polytopes[i]).extreme;
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace hypermet
