#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grext/exactnum/rational.hpp"

namespace grext {

/// Row-major dense matrix over Q for the small exact linear systems used when
/// solving lattice-membership and multiplier conditions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  /// Columns given as vectors of equal length.
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right kernel {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Rational>> kernel() const;
  std::optional<RationalMatrix> inverse() const;
  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Coordinates with respect to a list of Q-linearly independent vectors in
/// Q^m. Precomputes a pivot-row inverse so each query is one matrix-vector
/// product plus a consistency check.
class SpanSolver {
 public:
  SpanSolver() = default;
  /// Returns nullopt if the vectors are linearly dependent.
  static std::optional<SpanSolver> make(const std::vector<std::vector<Rational>>& basis);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rank_; }

  /// Coordinates c with sum c_i b_i = w, or nullopt if w is outside the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& w) const;

  /// Linear map w -> coordinates (valid when w is in the span); rank x m.
  const RationalMatrix& solve_matrix() const { return solve_; }
  /// Linear map w -> residual, zero exactly on the span; (m - rank) x m.
  const RationalMatrix& residual_matrix() const { return residual_; }

 private:
  std::size_t ambient_ = 0;
  std::size_t rank_ = 0;
  RationalMatrix solve_;
  RationalMatrix residual_;
};

}  // namespace grext
