#include "grext/exactnum/rational_matrix.hpp"

#include <utility>

namespace grext {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(
    const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return {};
  RationalMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && sgn((*this)(sel, col)) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
    }
    Rational inv = 1 / (*this)(row, col);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || sgn((*this)(i, col)) == 0) continue;
      Rational f = (*this)(i, col);
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  RationalMatrix r = *this;
  auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::optional<SpanSolver> SpanSolver::make(
    const std::vector<std::vector<Rational>>& basis) {
  SpanSolver s;
  s.rank_ = basis.size();
  s.ambient_ = basis.empty() ? 0 : basis.front().size();
  if (s.rank_ == 0) {
    s.residual_ = RationalMatrix::identity(s.ambient_);
    s.solve_ = RationalMatrix(0, s.ambient_);
    return s;
  }
  const std::size_t m = s.ambient_, n = s.rank_;
  // Row-reduce [B^T | I]: the pivot choice on B^T picks independent rows of B.
  RationalMatrix bt = RationalMatrix::from_columns(basis).transpose();  // n x m
  RationalMatrix work = bt;
  auto pivots = work.rref();
  if (pivots.size() < n) return std::nullopt;
  // Pivot rows of B (= pivot columns of B^T) form an invertible n x n block.
  RationalMatrix block(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(i, j) = bt(j, pivots[i]);
  }
  auto inv = block.inverse();
  if (!inv) return std::nullopt;
  s.solve_ = RationalMatrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.solve_(i, pivots[j]) = (*inv)(i, j);
  }
  // residual(w) = w - B * solve(w) restricted to non-pivot rows.
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix bmat = RationalMatrix::from_columns(basis);  // m x n
  RationalMatrix proj = bmat * s.solve_;                      // m x m
  s.residual_ = RationalMatrix(m - n, m);
  std::size_t out_row = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (is_pivot[r]) continue;
    for (std::size_t c = 0; c < m; ++c) {
      s.residual_(out_row, c) = (r == c ? Rational(1) : Rational(0)) - proj(r, c);
    }
    ++out_row;
  }
  return s;
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(
    const std::vector<Rational>& w) const {
  for (std::size_t r = 0; r < residual_.rows(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < residual_.cols(); ++c) {
      if (sgn(w[c]) != 0) acc += residual_(r, c) * w[c];
    }
    if (sgn(acc) != 0) return std::nullopt;
  }
  return solve_.apply(w);
}

}  // namespace grext
