#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grext/densegroup/lattice.hpp"

namespace grext {

/// Integer N×N matrix, row-major, as found by the bounded search.
using SmallMatrix = std::vector<std::int64_t>;

/// Linearized search problem: the images of n pivot columns determine the
/// extension, so T is parametrized by its pivot columns x ∈ [-B, B]^(n·N).
/// Every other column of T and the lattice condition are linear in x.
class AutSearchProblem {
 public:
  AutSearchProblem(const EmbeddedLattice& L, long bound);

  std::size_t unknowns() const { return unknowns_; }
  std::uint64_t candidates() const { return candidates_; }
  long bound() const { return bound_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Tests candidate number k (mixed-radix digits of x); fills T on success.
  bool test(std::uint64_t k, SmallMatrix& T) const;
  /// Extension matrix M with M·V = V·T.
  FieldMatrix extension(const SmallMatrix& T) const;

 private:
  struct Row {
    std::vector<std::int64_t> num;
    std::int64_t den = 1;
  };
  std::size_t n_, N_, unknowns_;
  long bound_;
  std::uint64_t candidates_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> others_;
  std::vector<Row> constraints_;           // must vanish
  std::vector<std::vector<Row>> columns_;  // per non-pivot column, N rows
  FieldMatrix pivot_inverse_;
  const EmbeddedLattice* lattice_;
};

/// All T ∈ GL(N,Z) with |entries| ≤ B realized by a linear automorphism of
/// Rⁿ preserving Γ, sorted lexicographically.
std::vector<SmallMatrix> bounded_aut_search_serial(const EmbeddedLattice& L, long bound);
std::vector<SmallMatrix> bounded_aut_search_parallel(const EmbeddedLattice& L, long bound);

/// Exact determinant for small matrices (fraction-free, 128-bit).
__int128 small_determinant(const SmallMatrix& T, std::size_t N);

}  // namespace grext
