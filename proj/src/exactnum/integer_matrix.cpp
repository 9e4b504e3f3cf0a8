#include "grext/exactnum/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace grext {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    for (long v : r) a_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix out = a;
  for (auto& v : out.a_) v = -v;
  return out;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& v) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntegerMatrix::set_column(std::size_t c, const std::vector<Integer>& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Integer IntegerMatrix::determinant() const {
  if (!is_square()) return 0;
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && sgn(m(sel, k)) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(sel, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool IntegerMatrix::is_unimodular() const {
  if (!is_square()) return false;
  Integer d = determinant();
  return d == 1 || d == -1;
}

std::optional<IntegerMatrix> IntegerMatrix::unimodular_inverse() const {
  if (!is_unimodular()) return std::nullopt;
  auto hnf = hermite_normal_form(*this);
  return hnf.U;
}

bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t IntegerMatrixHash::operator()(const IntegerMatrix& m) const {
  std::size_t h = m.rows() * 31 + m.cols();
  for (const auto& v : m.entries()) {
    h ^= std::hash<long>{}(mpz_get_si(v.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Replace rows (i, j) by the unimodular combination that puts gcd(a, b) in
// row i and zero in row j at the given column, where a = m(i,c), b = m(j,c).
void combine_rows(IntegerMatrix& m, IntegerMatrix& u, std::size_t i, std::size_t j,
                  std::size_t c) {
  Integer a = m(i, c), b = m(j, c);
  Integer g, s, t;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    // a | b: plain elimination, row i unchanged.
    g = abs(a);
    s = sgn(a);
    t = 0;
  } else {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  Integer ag = a / g, bg = b / g;
  auto apply = [&](IntegerMatrix& x) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      Integer ri = x(i, k), rj = x(j, k);
      x(i, k) = s * ri + t * rj;
      x(j, k) = -bg * ri + ag * rj;
    }
  };
  apply(m);
  apply(u);
}

void combine_cols(IntegerMatrix& m, IntegerMatrix& v, std::size_t i, std::size_t j,
                  std::size_t r) {
  Integer a = m(r, i), b = m(r, j);
  Integer g, s, t;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    // a | b: plain elimination, column i unchanged.
    g = abs(a);
    s = sgn(a);
    t = 0;
  } else {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  Integer ag = a / g, bg = b / g;
  auto apply = [&](IntegerMatrix& x) {
    for (std::size_t k = 0; k < x.rows(); ++k) {
      Integer ci = x(k, i), cj = x(k, j);
      x(k, i) = s * ci + t * cj;
      x(k, j) = -bg * ci + ag * cj;
    }
  };
  apply(m);
  apply(v);
}

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}

void negate_row(IntegerMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

}  // namespace

HermiteResult hermite_normal_form(const IntegerMatrix& m) {
  HermiteResult res{m, IntegerMatrix::identity(m.rows()), {}};
  IntegerMatrix& h = res.H;
  IntegerMatrix& u = res.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (sgn(h(i, col)) != 0) combine_rows(h, u, row, i, col);
    }
    if (sgn(h(row, col)) == 0) continue;
    if (sgn(h(row, col)) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    const Integer& p = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), p.get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) -= q * h(row, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) -= q * u(row, k);
    }
    res.pivot_columns.push_back(col);
    ++row;
  }
  return res;
}

std::vector<Integer> SmithResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    if (sgn(D(i, i)) != 0) out.push_back(D(i, i));
  }
  return out;
}

SmithResult smith_normal_form(const IntegerMatrix& m) {
  SmithResult res{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& d = res.D;
  const std::size_t rows = d.rows(), cols = d.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        Integer a = abs(d(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(res.U, t, pi);
    swap_cols(d, t, pj);
    swap_cols(res.V, t, pj);
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) != 0) combine_rows(d, res.U, t, i, t);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) != 0) combine_cols(d, res.V, t, j, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i) clean = sgn(d(i, t)) == 0;
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t k = 0; k < cols; ++k) d(t, k) += d(bad, k);
      for (std::size_t k = 0; k < res.U.cols(); ++k) res.U(t, k) += res.U(bad, k);
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(res.U, t);
    }
  }
  return res;
}

std::optional<Integer> AbelianInvariants::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianInvariants::name() const {
  if (is_trivial()) return "trivial";
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z_" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank);
  }
  return out;
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<Integer>& orders) {
  AbelianInvariants inv;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++inv.free_rank;
    } else if (abs(o) != 1) {
      finite.push_back(abs(o));
    }
  }
  if (finite.empty()) return inv;
  IntegerMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const auto& f : smith_normal_form(diag).invariant_factors()) {
    if (f != 1) inv.torsion.push_back(f);
  }
  return inv;
}

AbelianInvariants AbelianInvariants::cokernel(const IntegerMatrix& relations,
                                              std::size_t generators) {
  AbelianInvariants inv;
  if (relations.rows() == 0 || relations.cols() == 0) {
    inv.free_rank = generators;
    return inv;
  }
  auto factors = smith_normal_form(relations).invariant_factors();
  inv.free_rank = generators - factors.size();
  for (const auto& f : factors) {
    if (f != 1) inv.torsion.push_back(f);
  }
  return inv;
}

AbelianInvariants AbelianInvariants::direct_sum(const AbelianInvariants& other) const {
  std::vector<Integer> orders = torsion;
  orders.insert(orders.end(), other.torsion.begin(), other.torsion.end());
  for (std::size_t i = 0; i < free_rank + other.free_rank; ++i) orders.emplace_back(0);
  return from_cyclic_orders(orders);
}

AbelianInvariants AbelianInvariants::power(std::size_t k) const {
  AbelianInvariants out;
  for (std::size_t i = 0; i < k; ++i) out = out.direct_sum(*this);
  return out;
}

AbelianInvariants abelian_hom(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank; ++i) {
    for (std::size_t j = 0; j < b.free_rank; ++j) orders.emplace_back(0);
    for (const auto& t : b.torsion) orders.push_back(t);
  }
  for (const auto& s : a.torsion) {
    for (const auto& t : b.torsion) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
      orders.push_back(g);
    }
  }
  return AbelianInvariants::from_cyclic_orders(orders);
}

}  // namespace grext
