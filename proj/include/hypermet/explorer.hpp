#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermet/cone.hpp"
#include "hypermet/isometry.hpp"
#include "hypermet/polytope.hpp"

namespace hypermet {

struct ExploreBudget {
  std::size_t max_iterations = 1000;
  EnumerationBudget enumeration;
  RayBudget rays;
  std::size_t threads = 1;
};

enum class Verdict { Hypermetric, Violated, PsdIrreducible, Exhausted };
std::string to_string(Verdict v);

struct LogEntry {
  std::size_t iteration = 0;
  std::size_t f_size = 0;    // |F| when the candidate was tested
  std::size_t candidate = 0; // edge-direction index
  IntVector ray;
  Verdict verdict = Verdict::Hypermetric;
  std::vector<BVector> added;  // violated inequalities (new to F)
};

struct ExplorationState {
  std::size_t n = 0;
  ConeSystem cone;
  IntVector ray;  // the base extreme ray e
  std::vector<LogEntry> log;
};

/// F = non-basis vertices of P ∪ triangles, e = basis distances (made primitive).
/// Throws NotExtreme.
ExplorationState initialize(const DelaunayPolytope& p);
/// Start from an arbitrary ray of HYP (e.g. a cut): F = triangles ∪ Ann-free extras.
ExplorationState initialize_from_ray(std::size_t n, const IntVector& ray, const std::vector<BVector>& extra = {});

/// A certified neighbor ray and its Delaunay polytope.
struct Neighbor {
  IntVector ray;
  std::size_t dimension = 0;              // affine dimension (Gram rank)
  std::vector<std::size_t> points;        // basis points used for the polytope, in ray coordinates
  std::optional<DelaunayPolytope> polytope;  // absent: no integral basis among the points
  std::size_t incident_rank = 0;          // rank of F-functionals tight at the ray
  bool extreme_in_cone = false;
};

struct ExplorationResult {
  bool complete = false;
  std::size_t iterations = 0;
  std::vector<Neighbor> neighbors;        // sorted by ray
  std::vector<IntVector> unresolved;      // psd-irreducible or over-budget candidates
};

ExplorationResult explore(ExplorationState& state, const ExploreBudget& budget = {});

/// The polytope of a hypermetric ray. Coincident points are merged and a
/// rank-deficient point set is reduced to an integral subfamily.
Neighbor neighbor_polytope(std::size_t n, const IntVector& ray, const EnumerationBudget& budget = {});

struct IsometryClass {
  std::size_t representative = 0;          // index into the input
  std::vector<std::size_t> members;        // increasing
  std::size_t vertex_count = 0;
  std::size_t dimension = 0;
  Integer aut_order;
  bool extreme = false;
};

/// Partition by isometry of the rays (distances scaled to minimum 1). The
/// representative is the first member; classes are ordered by it.
std::vector<IsometryClass> classify_results(const std::vector<DelaunayPolytope>& polytopes);

}  // namespace hypermet
