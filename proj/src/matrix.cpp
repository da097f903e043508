#include "hypermet/matrix.hpp"

#include <utility>

#include "hypermet/error.hpp"

namespace hypermet {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row in matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row in matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatVector RatMatrix::diagonal() const {
  RatVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  RatMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Rational bilinear(const RatVector& x, const RatMatrix& a, const RatVector& y) {
  return dot(x, a * y);
}

Rational quadratic(const RatMatrix& a, const RatVector& x) { return bilinear(x, a, x); }

Rational quadratic(const RatMatrix& a, const IntVector& x) {
  RatVector xr = to_rational(x);
  return bilinear(xr, a, xr);
}

RowEchelon row_reduce(const RatMatrix& m) {
  RowEchelon out{m, {}};
  RatMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  return rank(RatMatrix::from_rows(rows, cols));
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const RatMatrix& a, const RatVector& rhs) {
  if (rhs.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_linear rhs");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = rhs[i];
  }
  RowEchelon e = row_reduce(aug);
  LinearSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    sol.kind = LinearSolution::Kind::Inconsistent;
    return sol;
  }
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
  sol.nullspace = nullspace(a);
  sol.kind = sol.nullspace.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Underdetermined;
  return sol;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

namespace {

// Symmetric swap of index i and j in a, plus the matching columns of t.
void swap_index(RatMatrix& a, RatMatrix& t, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  for (std::size_t k = 0; k < n; ++k) std::swap(t(k, i), t(k, j));
}

// index i <- index i + f * index j (congruence), tracked in t.
void add_index(RatMatrix& a, RatMatrix& t, std::size_t i, std::size_t j, const Rational& f) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) a(i, k) += f * a(j, k);
  for (std::size_t k = 0; k < n; ++k) a(k, i) += f * a(k, j);
  for (std::size_t k = 0; k < n; ++k) t(k, i) += f * t(k, j);
}

std::optional<RatVector> small_negative_vector(const RatMatrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) < 0) {
      RatVector w(n);
      w[i] = 1;
      return w;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        // (e_i + s e_j)ᵀ G (e_i + s e_j)
        Rational v = g(i, i) + g(j, j) + 2 * s * g(i, j);
        if (v < 0) {
          RatVector w(n);
          w[i] = 1;
          w[j] = s;
          return w;
        }
      }
  return std::nullopt;
}

}  // namespace

Inertia symmetric_inertia(const RatMatrix& g) {
  if (!g.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "symmetric_inertia needs a symmetric matrix");
  const std::size_t n = g.rows();
  RatMatrix a = g;
  RatMatrix t = RatMatrix::identity(n);  // invariant: tᵀ·g·t == a
  Inertia out;
  std::optional<std::size_t> negative_pivot;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: combine two indices with a nonzero coupling.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a(i, j) != 0) {
            add_index(a, t, i, j, Rational(1));
            p = i;
            found = true;
          }
      if (!found) break;  // remaining block is identically zero
    }
    swap_index(a, t, k, p);
    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      add_index(a, t, r, k, -a(r, k) / pivot);
    }
    if (pivot > 0) {
      ++out.positive;
    } else {
      ++out.negative;
      if (!negative_pivot) negative_pivot = k;
    }
  }
  out.zero = n - k;
  if (out.negative > 0) {
    out.negative_witness = small_negative_vector(g);
    if (!out.negative_witness) out.negative_witness = t.column(*negative_pivot);
  }
  return out;
}

bool is_positive_definite(const RatMatrix& g) {
  Inertia in = symmetric_inertia(g);
  return in.positive == g.rows();
}

}  // namespace hypermet
