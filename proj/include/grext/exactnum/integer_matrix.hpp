#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "grext/exactnum/rational.hpp"

namespace grext {

/// Row-major dense matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  const std::vector<Integer>& entries() const { return a_; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a);
  std::vector<Integer> apply(const std::vector<Integer>& v) const;
  IntegerMatrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Integer>& v);

  /// Exact determinant (fraction-free Bareiss elimination).
  Integer determinant() const;
  bool is_unimodular() const;
  /// Inverse of a unimodular matrix; nullopt otherwise.
  std::optional<IntegerMatrix> unimodular_inverse() const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

struct IntegerMatrixHash {
  std::size_t operator()(const IntegerMatrix& m) const;
};

struct HermiteResult {
  IntegerMatrix H;  ///< row-style Hermite normal form, H = U * M
  IntegerMatrix U;  ///< unimodular transform
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form: nonzero rows first, pivots strictly moving
/// right, positive pivots, entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntegerMatrix& m);

struct SmithResult {
  IntegerMatrix D;  ///< diagonal, d1 | d2 | ..., nonnegative; D = U * M * V
  IntegerMatrix U;
  IntegerMatrix V;
  /// Nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithResult smith_normal_form(const IntegerMatrix& m);

/// Abelian group invariants: Z_{t1} x ... x Z_{tk} x Z^r with 1 < t1 | t2 | ...
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  /// Order if finite.
  std::optional<Integer> order() const;
  /// Canonical name: "trivial", "Z_2", "Z^2", "Z_2 x Z", "Z_2 x Z_6 x Z^3".
  std::string name() const;
  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }

  /// Normalizes an arbitrary list of cyclic orders (0 meaning Z) into
  /// invariant-factor form.
  static AbelianInvariants from_cyclic_orders(const std::vector<Integer>& orders);
  /// Cokernel of a relation matrix: Z^cols / rowspace(relations).
  static AbelianInvariants cokernel(const IntegerMatrix& relations,
                                    std::size_t generators);
  AbelianInvariants direct_sum(const AbelianInvariants& other) const;
  AbelianInvariants power(std::size_t k) const;
};

/// Hom(A, B) for finitely generated abelian groups.
AbelianInvariants abelian_hom(const AbelianInvariants& a, const AbelianInvariants& b);

}  // namespace grext
