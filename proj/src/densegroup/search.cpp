#include "grext/densegroup/search.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "grext/error.hpp"

namespace grext {

namespace {

bool fits_int64(const Integer& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
         abs(z) < Integer(std::numeric_limits<std::int64_t>::max() / 1024);
}

}  // namespace

AutSearchProblem::AutSearchProblem(const EmbeddedLattice& L, long bound)
    : n_(L.ambient_dim()), N_(L.rank()), bound_(bound), lattice_(&L) {
  if (bound < 0) fail("BadBound", std::to_string(bound));
  // Greedy choice of n K-independent columns.
  for (std::size_t j = 0; j < N_ && pivots_.size() < n_; ++j) {
    std::vector<FieldVector> cols;
    for (auto p : pivots_) cols.push_back(L.column(p));
    cols.push_back(L.column(j));
    bool independent;
    if (cols.size() == 1) {
      independent = false;
      for (const auto& x : cols[0]) independent = independent || !x.is_zero();
    } else {
      independent = !FieldMatrix::from_columns(cols).determinant().is_zero();
    }
    if (independent) {
      pivots_.push_back(j);
    } else {
      others_.push_back(j);
    }
  }
  if (pivots_.size() < n_) fail("DegenerateLattice", "columns do not span the ambient space");
  for (std::size_t j = pivots_.back() + 1; j < N_; ++j) others_.push_back(j);
  std::sort(others_.begin(), others_.end());

  std::vector<FieldVector> pcols;
  for (auto p : pivots_) pcols.push_back(L.column(p));
  pivot_inverse_ = n_ == 1 ? FieldMatrix(1, {pcols[0][0]}).inverse()
                           : FieldMatrix::from_columns(pcols).inverse();

  unknowns_ = n_ * N_;
  if (unknowns_ > 64) fail("SearchTooLarge", std::to_string(unknowns_) + " unknowns");
  candidates_ = 1;
  for (std::size_t k = 0; k < unknowns_; ++k) {
    if (candidates_ > std::numeric_limits<std::uint64_t>::max() / (2 * bound + 1)) {
      fail("SearchTooLarge", "bound " + std::to_string(bound));
    }
    candidates_ *= static_cast<std::uint64_t>(2 * bound + 1);
  }

  const RationalMatrix& S = L.solver().solve_matrix();
  const RationalMatrix& R = L.solver().residual_matrix();
  auto to_row = [&](const std::vector<Rational>& r) {
    Row row;
    row.den = 1;
    Integer den = common_denominator(r);
    if (!fits_int64(den)) fail("SearchOverflow", "denominator", ErrorClass::Internal);
    row.den = den.get_si();
    for (const auto& q : r) {
      Integer z = Rational(q * den).get_num();
      if (!fits_int64(z)) fail("SearchOverflow", "numerator", ErrorClass::Internal);
      row.num.push_back(z.get_si());
    }
    return row;
  };
  for (auto j : others_) {
    FieldVector w = pivot_inverse_.apply(L.column(j));
    // F columns: flatten(w_q · v_i) for unknown index q·N + i.
    std::vector<std::vector<Rational>> F(unknowns_);
    for (std::size_t q = 0; q < n_; ++q) {
      for (std::size_t i = 0; i < N_; ++i) F[q * N_ + i] = L.flatten(scale(w[q], L.column(i)));
    }
    auto project = [&](const RationalMatrix& P, std::size_t r) {
      std::vector<Rational> row(unknowns_);
      for (std::size_t u = 0; u < unknowns_; ++u) {
        Rational acc = 0;
        for (std::size_t c = 0; c < P.cols(); ++c) acc += P(r, c) * F[u][c];
        row[u] = acc;
      }
      return row;
    };
    for (std::size_t r = 0; r < R.rows(); ++r) {
      auto row = project(R, r);
      bool nonzero = std::any_of(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; });
      if (nonzero) constraints_.push_back(to_row(row));
    }
    std::vector<Row> col;
    for (std::size_t r = 0; r < S.rows(); ++r) col.push_back(to_row(project(S, r)));
    columns_.push_back(std::move(col));
  }
}

bool AutSearchProblem::test(std::uint64_t k, SmallMatrix& T) const {
  std::int64_t x[64];
  const std::int64_t radix = 2 * bound_ + 1;
  for (std::size_t u = 0; u < unknowns_; ++u) {
    x[u] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(radix)) - bound_;
    k /= static_cast<std::uint64_t>(radix);
  }
  auto dot = [&](const Row& r) {
    __int128 acc = 0;
    for (std::size_t u = 0; u < unknowns_; ++u) acc += static_cast<__int128>(r.num[u]) * x[u];
    return acc;
  };
  for (const auto& c : constraints_) {
    if (dot(c) != 0) return false;
  }
  T.assign(N_ * N_, 0);
  for (std::size_t q = 0; q < n_; ++q) {
    for (std::size_t i = 0; i < N_; ++i) T[i * N_ + pivots_[q]] = x[q * N_ + i];
  }
  for (std::size_t o = 0; o < others_.size(); ++o) {
    for (std::size_t i = 0; i < N_; ++i) {
      const Row& r = columns_[o][i];
      __int128 v = dot(r);
      if (v % r.den != 0) return false;
      v /= r.den;
      if (v > bound_ || v < -bound_) return false;
      T[i * N_ + others_[o]] = static_cast<std::int64_t>(v);
    }
  }
  __int128 det = small_determinant(T, N_);
  return det == 1 || det == -1;
}

FieldMatrix AutSearchProblem::extension(const SmallMatrix& T) const {
  const EmbeddedLattice& L = *lattice_;
  // Images of the pivot columns, then M = [images] · V_P⁻¹.
  std::vector<FieldVector> images;
  for (auto p : pivots_) {
    std::vector<Integer> col(N_);
    for (std::size_t i = 0; i < N_; ++i) col[i] = static_cast<long>(T[i * N_ + p]);
    images.push_back(L.evaluate(col));
  }
  FieldMatrix img = n_ == 1 ? FieldMatrix(1, {images[0][0]}) : FieldMatrix::from_columns(images);
  return img * pivot_inverse_;
}

__int128 small_determinant(const SmallMatrix& T, std::size_t N) {
  if (N == 1) return T[0];
  if (N == 2) return static_cast<__int128>(T[0]) * T[3] - static_cast<__int128>(T[1]) * T[2];
  std::vector<__int128> m(T.begin(), T.end());
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (m[k * N + k] == 0) {
      std::size_t s = k + 1;
      while (s < N && m[s * N + k] == 0) ++s;
      if (s == N) return 0;
      for (std::size_t j = 0; j < N; ++j) std::swap(m[k * N + j], m[s * N + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        m[i * N + j] = (m[i * N + j] * m[k * N + k] - m[i * N + k] * m[k * N + j]) / prev;
      }
    }
    prev = m[k * N + k];
  }
  return sign * m[N * N - 1];
}

std::vector<SmallMatrix> bounded_aut_search_serial(const EmbeddedLattice& L, long bound) {
  AutSearchProblem prob(L, bound);
  std::vector<SmallMatrix> found;
  SmallMatrix T;
  for (std::uint64_t k = 0; k < prob.candidates(); ++k) {
    if (prob.test(k, T)) found.push_back(T);
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<SmallMatrix> bounded_aut_search_parallel(const EmbeddedLattice& L, long bound) {
  AutSearchProblem prob(L, bound);
  const auto total = static_cast<std::int64_t>(prob.candidates());
  std::vector<std::vector<SmallMatrix>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    SmallMatrix T;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      if (prob.test(static_cast<std::uint64_t>(k), T)) local.push_back(T);
    }
  }
  std::vector<SmallMatrix> found;
  for (auto& v : per_thread) found.insert(found.end(), v.begin(), v.end());
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace grext
