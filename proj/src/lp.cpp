#include "hypermet/lp.hpp"

#include "hypermet/error.hpp"

namespace hypermet {

LPProblem LPProblem::standard(RatMatrix a, RatVector rhs) {
  LPProblem p;
  p.relations.assign(a.rows(), Relation::Equal);
  p.signs.assign(a.cols(), VarSign::NonNegative);
  p.a = std::move(a);
  p.rhs = std::move(rhs);
  return p;
}

namespace {

void validate(const LPProblem& p) {
  if (p.rhs.size() != p.a.rows() || p.relations.size() != p.a.rows() || p.signs.size() != p.a.cols())
    throw Error(ErrorCode::DimensionMismatch, "inconsistent LP dimensions");
  if (p.objective && p.objective->size() != p.a.cols())
    throw Error(ErrorCode::DimensionMismatch, "LP objective length");
}

// Dense tableau: m constraint rows, `cols` variable columns, rhs kept apart.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), n_(cols), t_(m, RatVector(cols)), rhs_(m), basis_(m) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return rhs_[i]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return m_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Reduced costs of `cost` with respect to the current basis.
  RatVector reduced_costs(const RatVector& cost) const {
    RatVector rc = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] != 0) rc[j] -= cb * t_[i][j];
    }
    return rc;
  }

  // Bland's rule. Returns false when the objective is unbounded below.
  bool optimize(const RatVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      RatVector rc = reduced_costs(cost);
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (allowed[j] && rc[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<RatVector> t_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult lp_feasible(const LPProblem& p) {
  validate(p);
  const std::size_t m = p.a.rows();
  const std::size_t nvar = p.a.cols();

  // Column layout: structural (free vars split in two), slacks, artificials.
  std::vector<std::size_t> pos_col(nvar), neg_col(nvar, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < nvar; ++j) {
    pos_col[j] = cols++;
    if (p.signs[j] == VarSign::Free) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (p.relations[i] != Relation::Equal) slack_col[i] = cols++;
  const std::size_t first_artificial = cols;
  cols += m;

  Tableau tab(m, cols);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = p.rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nvar; ++j) {
      tab.at(i, pos_col[j]) = flip[i] * p.a(i, j);
      if (neg_col[j] != SIZE_MAX) tab.at(i, neg_col[j]) = -flip[i] * p.a(i, j);
    }
    if (slack_col[i] != SIZE_MAX) tab.at(i, slack_col[i]) = p.relations[i] == Relation::LessEqual ? flip[i] : -flip[i];
    tab.at(i, first_artificial + i) = 1;
    tab.rhs(i) = flip[i] * p.rhs[i];
    tab.basic(i) = first_artificial + i;
  }

  // Phase I: minimize the sum of artificials.
  RatVector phase1_cost(cols);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[first_artificial + i] = 1;
  std::vector<bool> allowed(cols, true);
  tab.optimize(phase1_cost, allowed);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basic(i) >= first_artificial) infeasibility += tab.rhs(i);

  LPResult result;
  if (infeasibility > 0) {
    // Phase I dual u has u_i = 1 - reduced cost of artificial i; y = -u.
    RatVector rc = tab.reduced_costs(phase1_cost);
    result.status = LPStatus::Infeasible;
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.farkas[i] = -(1 - rc[first_artificial + i]) * flip[i];
    return result;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basic(i) < first_artificial) continue;
    for (std::size_t j = 0; j < first_artificial; ++j)
      if (tab.at(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
  }
  for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;

  RatVector cost(cols);
  if (p.objective) {
    for (std::size_t j = 0; j < nvar; ++j) {
      cost[pos_col[j]] = (*p.objective)[j];
      if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -(*p.objective)[j];
    }
    if (!tab.optimize(cost, allowed)) {
      result.status = LPStatus::Unbounded;
      return result;
    }
  }

  RatVector values(cols);
  for (std::size_t i = 0; i < m; ++i) values[tab.basic(i)] = tab.rhs(i);
  result.status = LPStatus::Feasible;
  result.point.resize(nvar);
  for (std::size_t j = 0; j < nvar; ++j) {
    result.point[j] = values[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.point[j] -= values[neg_col[j]];
  }
  if (p.objective) result.value = dot(*p.objective, result.point);
  return result;
}

bool verify_point(const LPProblem& p, const RatVector& x) {
  validate(p);
  if (x.size() != p.a.cols()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (p.signs[j] == VarSign::NonNegative && x[j] < 0) return false;
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    Rational lhs = dot(p.a.row(i), x);
    switch (p.relations[i]) {
      case Relation::LessEqual:
        if (lhs > p.rhs[i]) return false;
        break;
      case Relation::Equal:
        if (lhs != p.rhs[i]) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < p.rhs[i]) return false;
        break;
    }
  }
  return true;
}

bool verify_farkas(const LPProblem& p, const RatVector& y) {
  validate(p);
  if (y.size() != p.a.rows()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (p.relations[i] == Relation::LessEqual && y[i] < 0) return false;
    if (p.relations[i] == Relation::GreaterEqual && y[i] > 0) return false;
  }
  if (dot(y, p.rhs) >= 0) return false;
  RatVector aty = p.a.transpose() * y;
  for (std::size_t j = 0; j < aty.size(); ++j) {
    if (p.signs[j] == VarSign::Free && aty[j] != 0) return false;
    if (p.signs[j] == VarSign::NonNegative && aty[j] < 0) return false;
  }
  return true;
}

}  // namespace hypermet
