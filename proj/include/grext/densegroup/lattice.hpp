#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grext/exactnum/integer_matrix.hpp"
#include "grext/exactnum/number_field.hpp"

namespace grext {

using FieldVector = std::vector<FieldElement>;

FieldVector operator+(const FieldVector& a, const FieldVector& b);
FieldVector operator-(const FieldVector& a, const FieldVector& b);
FieldVector operator-(const FieldVector& a);
FieldVector scale(const FieldElement& s, const FieldVector& v);
FieldVector zero_vector(const NumberField& f, std::size_t n);

/// Square matrix over a number field; row-major.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t n, std::vector<FieldElement> entries);
  static FieldMatrix identity(const NumberField& f, std::size_t n);
  static FieldMatrix scalar(const FieldElement& s, std::size_t n);
  static FieldMatrix from_columns(const std::vector<FieldVector>& cols);

  std::size_t size() const { return n_; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<FieldElement>& entries() const { return a_; }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) { return a.a_ == b.a_; }
  FieldVector apply(const FieldVector& v) const;
  FieldElement determinant() const;
  /// Throws DivisionByZero when singular.
  FieldMatrix inverse() const;

 private:
  std::size_t n_ = 0;
  std::vector<FieldElement> a_;
};

/// Finitely generated subgroup Γ ⊂ Rⁿ given by N exact generators.
class EmbeddedLattice {
 public:
  /// Validates Q-independence of the columns. For n = 1 the density flag is
  /// decided; for n = 2 it is left unchecked.
  static EmbeddedLattice make(const NumberField& field, std::size_t n,
                              std::vector<FieldVector> basis);

  const NumberField& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<FieldVector>& basis() const { return basis_; }
  const FieldVector& column(std::size_t i) const { return basis_[i]; }
  bool density_checked() const { return density_checked_; }
  bool dense() const { return dense_; }

  /// Rational coordinates of a vector in Rⁿ flattened to Q^(n·d).
  std::vector<Rational> flatten(const FieldVector& v) const;
  /// Coordinates in Γ ⊗ Q, if any.
  std::optional<std::vector<Rational>> coordinates(const FieldVector& v) const;
  /// Coordinates in Γ, if v ∈ Γ.
  std::optional<std::vector<Integer>> integer_coordinates(const FieldVector& v) const;
  /// ρ(γ) for γ ∈ Z^N.
  FieldVector evaluate(const std::vector<Integer>& gamma) const;
  const SpanSolver& solver() const { return solver_; }

  friend bool operator==(const EmbeddedLattice& a, const EmbeddedLattice& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  NumberField field_ = NumberField::rationals();
  std::size_t n_ = 1;
  std::vector<FieldVector> basis_;
  bool density_checked_ = false;
  bool dense_ = false;
  SpanSolver solver_;
};

inline EmbeddedLattice make_lattice(const NumberField& field, std::size_t n,
                                    std::vector<FieldVector> basis) {
  return EmbeddedLattice::make(field, n, std::move(basis));
}

}  // namespace grext
