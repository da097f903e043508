#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypermet/rational.hpp"

namespace hypermet {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatVector diagonal() const;

  RatMatrix transpose() const;
  RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& x);

/// xᵀ·A·y.
Rational bilinear(const RatVector& x, const RatMatrix& a, const RatVector& y);
Rational quadratic(const RatMatrix& a, const RatVector& x);
Rational quadratic(const RatMatrix& a, const IntVector& x);

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

/// Basis of {x : m·x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct LinearSolution {
  enum class Kind { Unique, Underdetermined, Inconsistent };
  Kind kind = Kind::Inconsistent;
  RatVector particular;             // empty when inconsistent
  std::vector<RatVector> nullspace;  // nonempty only when underdetermined
};

LinearSolution solve_linear(const RatMatrix& a, const RatVector& rhs);

/// Inverse of a nonsingular square matrix; std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::optional<RatVector> negative_witness;  // wᵀGw < 0 whenever negative > 0
};

/// Signature of a symmetric form by congruence (symmetric elimination),
/// never by eigenvalues.
Inertia symmetric_inertia(const RatMatrix& g);

bool is_positive_definite(const RatMatrix& g);

}  // namespace hypermet
