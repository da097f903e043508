#include "hypermet/cone.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "hypermet/error.hpp"
#include "hypermet/lp.hpp"

namespace hypermet {

IntVector functional_of(const BVector& b) {
  const std::size_t m = b.size();
  IntVector f;
  f.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) f.push_back(b[i] * b[j]);
  return f;
}

ConeSystem::ConeSystem(std::size_t n, const std::vector<BVector>& inequalities) : n_(n) { add(inequalities); }

std::size_t ConeSystem::add(const std::vector<BVector>& more) {
  std::size_t added = 0;
  for (const auto& b : more) {
    if (b.size() != n_ + 1) throw Error(ErrorCode::DimensionMismatch, "b-vector length differs from n + 1");
    IntVector f = functional_of(b);
    auto [it, fresh] = index_.try_emplace(f, b_.size());
    if (fresh) {
      b_.push_back(b);
      f_.push_back(std::move(f));
      ++added;
    } else if (b < b_[it->second]) {
      b_[it->second] = b;
    }
  }
  return added;
}

bool ConeSystem::contains(const BVector& b) const {
  return index_.count(functional_of(b)) != 0;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct DDRay {
  IntVector v;
  Bits zeros;  // processed rows vanishing on v
};

Integer sign_dot(const IntVector& f, const IntVector& v) { return dot(f, v); }

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& input, std::size_t dim, const RayBudget& budget) {
  std::vector<IntVector> rows;
  for (const auto& r : input) {
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint row length differs from dimension");
    if (!is_zero(r)) rows.push_back(r);
  }
  if (dim == 0) return {};

  // Greedy independent rows in input order seed a simplicial cone.
  std::vector<std::size_t> basis;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
      chosen.push_back(rows[i]);
      if (rank(chosen, dim) == chosen.size())
        basis.push_back(i);
      else
        chosen.pop_back();
    }
  }
  if (basis.size() < dim) throw Error(ErrorCode::NotPointed, "constraints have rank " + std::to_string(basis.size()) +
                                                                 " < " + std::to_string(dim));

  const std::size_t m = rows.size();
  RatMatrix ab = RatMatrix::from_rows([&] {
    std::vector<IntVector> sel;
    for (auto i : basis) sel.push_back(rows[i]);
    return sel;
  }(), dim);
  RatMatrix inv = *inverse(ab);

  std::vector<DDRay> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = -inv(i, k);
    DDRay r{primitive(col), Bits(m)};
    for (std::size_t t = 0; t < dim; ++t)
      if (t != k) r.zeros.set(basis[t]);
    rays.push_back(std::move(r));
  }

  Bits in_basis(m);
  for (auto i : basis) in_basis.set(i);

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis[row]) continue;
    const IntVector& f = rows[row];
    std::vector<int> side(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      int s = sgn(sign_dot(f, rays[k].v));
      side[k] = s;
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
    }
    if (pos.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (side[k] == 0) rays[k].zeros.set(row);
      continue;
    }

    std::vector<DDRay> created;
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.is_subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        const IntVector& vp = rays[p].v;
        const IntVector& vq = rays[q].v;
        Integer a = sign_dot(f, vp), b = -sign_dot(f, vq);
        IntVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = a * vq[i] + b * vp[i];
        DDRay r{primitive(v), std::move(common)};
        r.zeros.set(row);
        created.push_back(std::move(r));
      }
    }
    std::vector<DDRay> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (side[k] > 0) continue;
      if (side[k] == 0) rays[k].zeros.set(row);
      next.push_back(std::move(rays[k]));
    }
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
    if (rays.size() > budget.ray_limit)
      throw Error(ErrorCode::BudgetExhausted, "double description exceeded " + std::to_string(budget.ray_limit) + " rays");
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BVector> incident_subset(const ConeSystem& cone, const RatVector& d) {
  if (d.size() != cone.dimension()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from cone");
  std::vector<BVector> out;
  for (std::size_t k = 0; k < cone.size(); ++k) {
    const IntVector& f = cone.functionals()[k];
    if (!is_zero(f) && dot(f, d) == 0) out.push_back(cone.inequalities()[k]);
  }
  return out;
}

ExtremeRayTest is_extreme_ray(const std::vector<IntVector>& functionals, const RatVector& d) {
  const std::size_t dim = d.size();
  if (is_zero(d)) throw Error(ErrorCode::PointNotInCone, "the zero vector is not a ray");
  std::vector<IntVector> tight;
  for (const auto& f : functionals) {
    if (f.size() != dim) throw Error(ErrorCode::DimensionMismatch, "functional length differs from point");
    Rational v = dot(f, d);
    if (v > 0) throw Error(ErrorCode::PointNotInCone, "point violates " + format_vector(f) + " by " + to_string(v));
    if (v == 0 && !is_zero(f)) tight.push_back(f);
  }
  ExtremeRayTest t;
  t.rank = tight.empty() ? 0 : rank(tight, dim);
  t.extreme = t.rank + 1 == dim;
  return t;
}

ExtremeRayTest is_extreme_ray(const ConeSystem& cone, const RatVector& d) {
  if (d.size() != cone.dimension()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from cone");
  return is_extreme_ray(cone.functionals(), d);
}

LocalCone::LocalCone(const std::vector<IntVector>& functionals, const IntVector& e, const RayBudget& budget)
    : e_(e) {
  const std::size_t dim = e.size();
  auto test = is_extreme_ray(functionals, to_rational(e));
  if (!test.extreme)
    throw Error(ErrorCode::NotExtreme, "incident functionals have rank " + std::to_string(test.rank) + ", need " +
                                           std::to_string(dim - 1));
  std::size_t pivot = 0;
  while (e[pivot] == 0) ++pivot;

  std::vector<IntVector> quotient;
  bool strict = false;
  for (const auto& f : functionals) {
    if (is_zero(f)) continue;
    if (dot(f, e) != 0) {
      strict = true;
      continue;
    }
    ++incident_;
    IntVector q;
    q.reserve(dim - 1);
    for (std::size_t i = 0; i < dim; ++i)
      if (i != pivot) q.push_back(f[i]);
    quotient.push_back(std::move(q));
  }
  // Without a strict inequality -e is feasible too.
  if (!strict && dim > 1) throw Error(ErrorCode::NotPointed, "no inequality is strict at the ray");

  for (auto& r : extreme_rays(quotient, dim - 1, budget)) {
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(pivot), Integer(0));
    dirs_.push_back(std::move(r));
  }
}

std::optional<Rational> LocalCone::step_bound(const IntVector& f, std::size_t k) const {
  // Along x = r + s·e, a strict f allows s ≥ (f·r)/(-f·e); incident ones hold for all s.
  Integer fe = dot(f, e_);
  if (fe == 0) return std::nullopt;
  Rational bound(dot(f, dirs_.at(k)), -fe);
  bound.canonicalize();
  return bound;
}

IntVector LocalCone::point(std::size_t k, const Rational& s) const {
  const IntVector& r = dirs_.at(k);
  RatVector x(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) x[i] = Rational(r[i]) + s * Rational(e_[i]);
  return primitive(x);
}

IntVector LocalCone::neighbor(const std::vector<IntVector>& functionals, std::size_t k) const {
  std::optional<Rational> s;
  for (const auto& f : functionals)
    if (auto b = step_bound(f, k); b && (!s || *b > *s)) s = std::move(b);
  if (!s) throw Error(ErrorCode::NotPointed, "no inequality is strict at the ray");
  return point(k, *s);
}

std::vector<IntVector> LocalCone::neighbors(const std::vector<IntVector>& functionals) const {
  std::vector<IntVector> out;
  out.reserve(dirs_.size());
  for (std::size_t k = 0; k < dirs_.size(); ++k) out.push_back(neighbor(functionals, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> adjacent_rays(const std::vector<IntVector>& functionals, const IntVector& e,
                                     const RayBudget& budget) {
  return LocalCone(functionals, e, budget).neighbors(functionals);
}

std::vector<IntVector> adjacent_rays(const ConeSystem& cone, const IntVector& e, const RayBudget& budget) {
  if (e.size() != cone.dimension()) throw Error(ErrorCode::DimensionMismatch, "ray dimension differs from cone");
  return adjacent_rays(cone.functionals(), e, budget);
}

IrredundancyResult irredundancy_filter(const std::vector<BVector>& incident) {
  IrredundancyResult out;
  std::vector<IntVector> f;
  for (const auto& b : incident) f.push_back(functional_of(b));
  for (std::size_t i = 0; i < incident.size(); ++i) {
    const std::size_t dim = f[i].size();
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < incident.size(); ++j)
      if (j != i) others.push_back(f[j]);
    RatMatrix a(dim, others.size());
    for (std::size_t c = 0; c < others.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) a(r, c) = others[c][r];
    bool redundant = false;
    if (is_zero(f[i])) {
      redundant = true;
    } else if (!others.empty()) {
      redundant = lp_feasible(LPProblem::standard(a, to_rational(f[i]))).status == LPStatus::Feasible;
    }
    (redundant ? out.redundant : out.facets).push_back(incident[i]);
  }
  return out;
}

BVector canonical_bvector(const BVector& b) {
  IntVector v = b.entries();
  std::sort(v.begin(), v.end(), std::greater<>());
  return BVector(std::move(v));
}

}  // namespace hypermet
