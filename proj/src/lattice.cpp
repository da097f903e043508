#include "hypermet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hypermet/error.hpp"

namespace hypermet {

namespace {

// Integers w with (w - c)² ≤ t, as [lo, hi]; empty when lo > hi.
std::pair<Integer, Integer> integer_range(const Rational& c, const Rational& t) {
  if (t < 0) return {Integer(1), Integer(0)};
  const Integer& p = c.get_num();
  const Integer& q = c.get_den();
  Integer scaled = floor_of(t * Rational(q * q));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return {ceil_of(Rational(p - s, q)), floor_of(Rational(p + s, q))};
}

// Fincke–Pohst enumeration over yᵀGy = Σ_i D_i (y_i + Σ_{j>i} L_ji y_j)²
// with exact rational bounds. The visitor receives each leaf and returns
// the bound to use from then on.
class Enumerator {
 public:
  Enumerator(const RatMatrix& gram, const RatVector& target, const EnumerationBudget& budget)
      : n_(gram.rows()), target_(target), l_(n_, n_), d_(n_), budget_(budget) {
    if (!gram.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "Gram matrix is not symmetric");
    if (target.size() != n_) throw Error(ErrorCode::DimensionMismatch, "CVP target length");
    for (std::size_t i = 0; i < n_; ++i) {
      Rational di = gram(i, i);
      for (std::size_t k = 0; k < i; ++k) di -= l_(i, k) * l_(i, k) * d_[k];
      if (di <= 0) throw Error(ErrorCode::NotPositiveDefinite, "lattice Gram is not positive definite");
      d_[i] = di;
      l_(i, i) = 1;
      for (std::size_t j = i + 1; j < n_; ++j) {
        Rational v = gram(j, i);
        for (std::size_t k = 0; k < i; ++k) v -= l_(j, k) * l_(i, k) * d_[k];
        l_(j, i) = v / di;
      }
    }
  }

  using Visitor = std::function<Rational(const IntVector&, const Rational&)>;

  void run(Rational bound, const Visitor& visit) {
    w_.assign(n_, Integer(0));
    bound_ = std::move(bound);
    visit_ = &visit;
    nodes_ = 0;
    descend(n_, Rational(0));
  }

 private:
  void descend(std::size_t level, const Rational& partial) {
    if (level == 0) {
      bound_ = (*visit_)(w_, partial);
      return;
    }
    const std::size_t i = level - 1;
    Rational center = target_[i];
    for (std::size_t j = i + 1; j < n_; ++j) center -= l_(j, i) * (Rational(w_[j]) - target_[j]);
    auto [lo, hi] = integer_range(center, (bound_ - partial) / d_[i]);
    for (Integer w = lo; w <= hi; ++w) {
      if (++nodes_ > budget_.node_limit)
        throw Error(ErrorCode::BudgetExhausted, "CVP enumeration exceeded the node limit");
      Rational diff = Rational(w) - center;
      Rational next = partial + d_[i] * diff * diff;
      if (next > bound_) continue;  // bound may have shrunk since the range was computed
      w_[i] = w;
      descend(i, next);
    }
    w_[i] = 0;
  }

  std::size_t n_;
  RatVector target_;
  RatMatrix l_;
  RatVector d_;
  EnumerationBudget budget_;
  IntVector w_;
  Rational bound_;
  const Visitor* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
};

void combinations(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> pd_negative(const RatMatrix& g, const RatVector& linear, const Rational& constant,
                                   bool collect_all, const EnumerationBudget& budget) {
  // q(w) = (w - a)ᵀG(w - a) - R with 2Ga = linear, R = aᵀGa - constant.
  RatVector half(linear.size());
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = linear[i] / 2;
  LinearSolution sol = solve_linear(g, half);
  RatVector center = sol.particular;
  Rational radius2 = quadratic(g, center) - constant;
  if (radius2 <= 0) return {};
  CVPQuery q{g, center, radius2};
  if (collect_all) return cvp_all_strictly_inside(q, budget);
  auto best = cvp_strictly_inside(q, budget);
  if (!best) return {};
  return {*best};
}

}  // namespace

std::optional<IntVector> cvp_strictly_inside(const CVPQuery& q, const EnumerationBudget& budget) {
  Enumerator en(q.gram, q.target, budget);
  std::optional<IntVector> best;
  Rational best_value;
  en.run(q.radius2, [&](const IntVector& w, const Rational& value) -> Rational {
    if (value < q.radius2) {
      if (!best || value < best_value || (value == best_value && w < *best)) {
        best = w;
        best_value = value;
      }
      return best_value;
    }
    return q.radius2;
  });
  return best;
}

std::vector<IntVector> cvp_all_strictly_inside(const CVPQuery& q, const EnumerationBudget& budget) {
  Enumerator en(q.gram, q.target, budget);
  std::vector<IntVector> out;
  en.run(q.radius2, [&](const IntVector& w, const Rational& value) -> Rational {
    if (value < q.radius2) out.push_back(w);
    return q.radius2;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> cvp_at_exact_radius(const CVPQuery& q, const EnumerationBudget& budget) {
  Enumerator en(q.gram, q.target, budget);
  std::vector<IntVector> out;
  en.run(q.radius2, [&](const IntVector& w, const Rational& value) -> Rational {
    if (value == q.radius2) out.push_back(w);
    return q.radius2;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PsdReduction> psd_reduce(const RatMatrix& gram, const std::vector<RatVector>& points) {
  Inertia in = symmetric_inertia(gram);
  if (in.negative > 0) throw Error(ErrorCode::NotPositiveSemidefinite, "psd_reduce on an indefinite form");
  const std::size_t n = gram.rows();
  const std::size_t r = in.positive;
  std::optional<PsdReduction> found;
  combinations(n, r, [&](const std::vector<std::size_t>& subset) {
    RatMatrix gs = gram.submatrix(subset, subset);
    auto inv = inverse(gs);
    if (!inv) return false;
    std::vector<IntVector> expr(n, IntVector(r));
    for (std::size_t j = 0; j < n; ++j) {
      RatVector rhs(r);
      for (std::size_t k = 0; k < r; ++k) rhs[k] = gram(subset[k], j);
      RatVector c = *inv * rhs;
      for (std::size_t k = 0; k < r; ++k) {
        if (c[k].get_den() != 1) return false;
        expr[j][k] = c[k].get_num();
      }
    }
    PsdReduction red{subset, std::move(gs), std::move(expr), {}};
    for (const auto& x : points) {
      if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "psd_reduce point length");
      RatVector y(r);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < r; ++k) y[k] += Rational(red.expressions[j][k]) * x[j];
      red.points.push_back(std::move(y));
    }
    found = std::move(red);
    return true;
  });
  return found;
}

Rational InhomogeneousForm::value(const IntVector& w) const {
  return quadratic(gram, w) - dot(w, linear) + constant;
}

namespace {

// Points with |w_i| ≤ B where q(w) < 0, for B = 1, 2, … while the box has at
// most 10⁴ points (in practice B = 1 for n ≤ 8). All of them (lexicographic) with `collect_all`, else the
// most negative one, lexicographically first among ties.
std::vector<IntVector> box_negative(const InhomogeneousForm& form, bool collect_all) {
  const std::size_t n = form.gram.rows();
  if (n == 0) return {};
  // Integer coefficients: L·q(w) = wᵀAw - aᵀw + c.
  Integer l = 1;
  auto fold = [&](const Rational& x) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t()); };
  for (std::size_t i = 0; i < n; ++i) {
    fold(form.linear[i]);
    for (std::size_t j = 0; j < n; ++j) fold(form.gram(i, j));
  }
  fold(form.constant);
  auto scaled = [&](const Rational& x) { return Integer(x.get_num() * (l / x.get_den())); };
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  std::vector<Integer> lin(n);
  for (std::size_t i = 0; i < n; ++i) {
    lin[i] = scaled(form.linear[i]);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = scaled(form.gram(i, j));
  }
  const Integer c = scaled(form.constant);

  std::vector<IntVector> out;
  std::optional<Integer> best;
  for (long bound = 1;; ++bound) {
    double points = std::pow(2.0 * bound + 1, static_cast<double>(n));
    if (points > 1e4) break;
    std::vector<long> w(n, -bound);
    Integer q;
    for (;;) {
      q = c;
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        q -= lin[i] * w[i];
        Integer row = a[i][i] * w[i];
        for (std::size_t j = i + 1; j < n; ++j)
          if (w[j] != 0) row += 2 * a[i][j] * w[j];
        q += row * w[i];
      }
      if (q < 0) {
        IntVector wi(w.begin(), w.end());
        if (collect_all) {
          out.push_back(std::move(wi));
        } else if (!best || q < *best) {
          best = q;
          out = {std::move(wi)};
        }
      }
      std::size_t k = n;
      while (k > 0 && w[k - 1] == bound) w[--k] = -bound;
      if (k == 0) break;
      ++w[k - 1];
    }
    if (!out.empty()) break;
  }
  return out;  // enumeration order is lexicographic
}

}  // namespace

NegativeSearch find_negative_points(const InhomogeneousForm& form, bool collect_all,
                                    const EnumerationBudget& budget) {
  const RatMatrix& g = form.gram;
  const std::size_t n = g.rows();
  if (form.linear.size() != n) throw Error(ErrorCode::DimensionMismatch, "linear term length");
  Inertia in = symmetric_inertia(g);
  NegativeSearch out;
  out.rank = in.positive + in.negative;

  if (in.negative > 0) {
    out.form_class = FormClass::Indefinite;
    // Small witnesses first: cuts with small coefficients keep exact
    // arithmetic cheap for every caller that adds them as inequalities.
    out.witnesses = box_negative(form, collect_all);
    if (!out.witnesses.empty()) return out;
    // a·k² - β·k + constant has negative leading coefficient: double k until negative.
    IntVector z = primitive(*in.negative_witness);
    Rational a = quadratic(g, z);
    Rational beta = dot(z, form.linear);
    Integer k = 1;
    while (a * Rational(k * k) - beta * Rational(k) + form.constant >= 0) k *= 2;
    for (auto& x : z) x *= k;
    out.witnesses.push_back(std::move(z));
    return out;
  }

  if (in.zero == 0) {
    out.form_class = FormClass::PositiveDefinite;
    out.witnesses = pd_negative(g, form.linear, form.constant, collect_all, budget);
    return out;
  }

  out.form_class = FormClass::Semidefinite;
  auto red = psd_reduce(g);
  if (!red) throw Error(ErrorCode::PsdIrreducible, "no integral subfamily spans the semidefinite lattice");
  const std::size_t r = red->subfamily.size();
  RatMatrix m(r, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) m(k, j) = red->expressions[j][k];

  // q is linear along ker M; any kernel direction with nonzero slope wins.
  for (const auto& kv : nullspace(m)) {
    IntVector dir = primitive(kv);
    Rational beta = dot(dir, form.linear);
    if (beta == 0) continue;
    if (beta < 0) {
      for (auto& x : dir) x = -x;
      beta = -beta;
    }
    Integer t = 1;
    if (form.constant >= 0) t = floor_of(form.constant / beta) + 1;
    for (auto& x : dir) x *= t;
    out.witnesses.push_back(std::move(dir));
    return out;
  }

  LinearSolution lambda = solve_linear(m.transpose(), form.linear);
  if (lambda.kind == LinearSolution::Kind::Inconsistent)
    throw Error(ErrorCode::InvalidArgument, "linear term does not factor through the reduced lattice");
  for (const auto& y : pd_negative(red->reduced_gram, lambda.particular, form.constant, collect_all, budget)) {
    IntVector w(n);
    for (std::size_t k = 0; k < r; ++k) w[red->subfamily[k]] = y[k];
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

NormQueryResult dispatch_norm_query(const RatMatrix& gram, const RatVector& x, const Rational& r2,
                                    const EnumerationBudget& budget) {
  InhomogeneousForm form;
  form.gram = gram;
  RatVector gx = gram * x;
  form.linear.resize(gx.size());
  for (std::size_t i = 0; i < gx.size(); ++i) form.linear[i] = 2 * gx[i];
  form.constant = dot(x, gx) - r2;
  NegativeSearch s = find_negative_points(form, false, budget);
  NormQueryResult out{s.form_class, std::nullopt};
  if (!s.witnesses.empty()) out.witness = s.witnesses.front();
  return out;
}

}  // namespace hypermet
