#include "grext/densegroup/lattice.hpp"

#include "grext/error.hpp"

namespace grext {

FieldVector operator+(const FieldVector& a, const FieldVector& b) {
  FieldVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FieldVector operator-(const FieldVector& a, const FieldVector& b) {
  FieldVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FieldVector operator-(const FieldVector& a) {
  FieldVector r = a;
  for (auto& x : r) x = -x;
  return r;
}

FieldVector scale(const FieldElement& s, const FieldVector& v) {
  FieldVector r = v;
  for (auto& x : r) x = s * x;
  return r;
}

FieldVector zero_vector(const NumberField& f, std::size_t n) {
  return FieldVector(n, FieldElement::zero(f));
}

FieldMatrix::FieldMatrix(std::size_t n, std::vector<FieldElement> entries)
    : n_(n), a_(std::move(entries)) {}

FieldMatrix FieldMatrix::identity(const NumberField& f, std::size_t n) {
  return scalar(FieldElement::one(f), n);
}

FieldMatrix FieldMatrix::scalar(const FieldElement& s, std::size_t n) {
  std::vector<FieldElement> a(n * n, FieldElement::zero(s.field()));
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = s;
  return FieldMatrix(n, std::move(a));
}

FieldMatrix FieldMatrix::from_columns(const std::vector<FieldVector>& cols) {
  const std::size_t n = cols.size();
  std::vector<FieldElement> a(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i * n + j] = cols[j][i];
  }
  return FieldMatrix(n, std::move(a));
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t n = a.n_;
  std::vector<FieldElement> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < n; ++k) acc += a(i, k) * b(k, j);
      out[i * n + j] = acc;
    }
  }
  return FieldMatrix(n, std::move(out));
}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
  FieldVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    FieldElement acc = (*this)(i, 0) * v[0];
    for (std::size_t k = 1; k < n_; ++k) acc += (*this)(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

FieldElement FieldMatrix::determinant() const {
  if (n_ == 1) return a_[0];
  if (n_ == 2) return a_[0] * a_[3] - a_[1] * a_[2];
  // Gaussian elimination for the general case.
  FieldMatrix m = *this;
  FieldElement det = FieldElement::one(a_[0].field());
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && m(p, c).is_zero()) ++p;
    if (p == n_) return FieldElement::zero(a_[0].field());
    if (p != c) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    FieldElement inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m(r, c).is_zero()) continue;
      FieldElement f = m(r, c) * inv;
      for (std::size_t k = c; k < n_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

FieldMatrix FieldMatrix::inverse() const {
  FieldElement det = determinant();
  if (det.is_zero()) fail("DivisionByZero", "singular matrix");
  if (n_ == 1) return FieldMatrix(1, {a_[0].inverse()});
  if (n_ == 2) {
    FieldElement inv = det.inverse();
    return FieldMatrix(2, {a_[3] * inv, -(a_[1] * inv), -(a_[2] * inv), a_[0] * inv});
  }
  // Gauss-Jordan.
  FieldMatrix m = *this;
  FieldMatrix out = identity(a_[0].field(), n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (m(p, c).is_zero()) ++p;
    for (std::size_t k = 0; k < n_; ++k) {
      std::swap(m(p, k), m(c, k));
      std::swap(out(p, k), out(c, k));
    }
    FieldElement inv = m(c, c).inverse();
    for (std::size_t k = 0; k < n_; ++k) {
      m(c, k) = m(c, k) * inv;
      out(c, k) = out(c, k) * inv;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      FieldElement f = m(r, c);
      for (std::size_t k = 0; k < n_; ++k) {
        m(r, k) -= f * m(c, k);
        out(r, k) -= f * out(c, k);
      }
    }
  }
  return out;
}

EmbeddedLattice EmbeddedLattice::make(const NumberField& field, std::size_t n,
                                      std::vector<FieldVector> basis) {
  if (n != 1 && n != 2) fail("AmbientDimUnsupported", "n = " + std::to_string(n));
  if (basis.empty()) fail("EmptyBasis", "rank 0");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != n) {
      fail("BasisShape", "column " + std::to_string(j) + " has " +
                             std::to_string(basis[j].size()) + " entries");
    }
    for (const auto& x : basis[j]) {
      if (x.field() != field) fail("MixedFields", "column " + std::to_string(j));
    }
  }
  EmbeddedLattice L;
  L.field_ = field;
  L.n_ = n;
  L.basis_ = std::move(basis);
  std::vector<std::vector<Rational>> flat;
  for (const auto& v : L.basis_) flat.push_back(L.flatten(v));
  auto solver = SpanSolver::make(flat);
  if (!solver) {
    RationalMatrix m = RationalMatrix::from_columns(flat);
    auto ker = m.kernel();
    std::string w;
    for (const auto& c : ker.front()) w += (w.empty() ? "" : ",") + to_short_string(c);
    fail("DependentGenerators", "relation (" + w + ")");
  }
  L.solver_ = std::move(*solver);
  if (n == 1) {
    // Q-independent with N ≥ 2 forces an irrational ratio, hence density.
    if (L.rank() < 2) fail("NotDense", "rank 1 subgroup of R is discrete");
    FieldElement ratio = L.basis_[1][0] / L.basis_[0][0];
    L.dense_ = minimal_polynomial(ratio).size() > 2;
    L.density_checked_ = true;
    if (!L.dense_) fail("NotDense", "ratio " + ratio.pretty() + " is rational");
  }
  return L;
}

std::vector<Rational> EmbeddedLattice::flatten(const FieldVector& v) const {
  std::vector<Rational> out;
  out.reserve(n_ * static_cast<std::size_t>(field_.degree()));
  for (const auto& x : v) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  return out;
}

std::optional<std::vector<Rational>> EmbeddedLattice::coordinates(const FieldVector& v) const {
  return solver_.coordinates(flatten(v));
}

std::optional<std::vector<Integer>> EmbeddedLattice::integer_coordinates(
    const FieldVector& v) const {
  auto c = coordinates(v);
  if (!c) return std::nullopt;
  std::vector<Integer> out;
  out.reserve(c->size());
  for (const auto& q : *c) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

FieldVector EmbeddedLattice::evaluate(const std::vector<Integer>& gamma) const {
  FieldVector out = zero_vector(field_, n_);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (sgn(gamma[j]) == 0) continue;
    Rational c(gamma[j]);
    for (std::size_t i = 0; i < n_; ++i) out[i] += c * basis_[j][i];
  }
  return out;
}

}  // namespace grext
