#include "grext/grpd/groupoid.hpp"

namespace grext {

namespace {

void require_lattice(const EmbeddedLattice& L, const std::vector<Integer>& gamma) {
  if (gamma.size() != L.rank()) {
    fail("MixedLattices", "γ of length " + std::to_string(gamma.size()) + " for rank " +
                              std::to_string(L.rank()));
  }
}

void require_compatible(const AutRhoElement& a, const AutRhoElement& b) {
  if (a.T.rows() != b.T.rows() || a.extension.size() != b.extension.size() ||
      a.extension(0, 0).field() != b.extension(0, 0).field()) {
    fail("MixedLattices", "automorphisms of different lattices");
  }
}

}  // namespace

std::string vector_string(const FieldVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].pretty();
  return s + ")";
}

FieldVector target(const EmbeddedLattice& L, const GroupoidElement& e) {
  require_lattice(L, e.gamma);
  return L.evaluate(e.gamma) + e.x;
}

GroupoidElement groupoid_unit(const EmbeddedLattice& L, const FieldVector& x) {
  return {std::vector<Integer>(L.rank()), x};
}

GroupoidElement groupoid_inverse(const EmbeddedLattice& L, const GroupoidElement& e) {
  std::vector<Integer> neg = e.gamma;
  for (auto& z : neg) z = -z;
  return {neg, target(L, e)};
}

GroupoidElement compose(const EmbeddedLattice& L, const GroupoidElement& e2,
                        const GroupoidElement& e1) {
  require_lattice(L, e2.gamma);
  FieldVector t1 = target(L, e1);
  if (!(source(e2) == t1)) {
    fail("NotComposable", "source " + vector_string(source(e2)) + " != target " + vector_string(t1));
  }
  std::vector<Integer> sum = e2.gamma;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e1.gamma[i];
  return {sum, e1.x};
}

AutGroupoidElement aut_pair_identity(const EmbeddedLattice& L) {
  return {aut_identity(L), zero_vector(L.field(), L.ambient_dim())};
}

AutGroupoidElement aut_compose(const AutGroupoidElement& p, const AutGroupoidElement& q) {
  require_compatible(p.alpha, q.alpha);
  return {aut_compose(p.alpha, q.alpha), p.g + p.alpha.extension.apply(q.g)};
}

AutGroupoidElement aut_inverse(const AutGroupoidElement& p) {
  AutRhoElement inv = aut_inverse(p.alpha);
  return {inv, -inv.extension.apply(p.g)};
}

GroupoidElement psi_apply(const AutGroupoidElement& p, const GroupoidElement& e) {
  if (e.gamma.size() != p.alpha.T.rows() || e.x.size() != p.alpha.extension.size()) {
    fail("MixedLattices", "ψ argument shape");
  }
  return {p.alpha.T.apply(e.gamma), phi0(p, e.x)};
}

FieldVector phi0(const AutGroupoidElement& p, const FieldVector& x) {
  return p.alpha.extension.apply(x) - p.g;
}

AutGroupoidElement mu(const EmbeddedLattice& L, const std::vector<Integer>& gamma) {
  require_lattice(L, gamma);
  return {aut_identity(L), -L.evaluate(gamma)};
}

NormalityReport check_mu_normality(const EmbeddedLattice& L, const AutGroupoidElement& p,
                                   const std::vector<Integer>& gamma) {
  NormalityReport r;
  r.lhs = aut_compose(aut_compose(p, mu(L, gamma)), aut_inverse(p));
  r.rhs = mu(L, p.alpha.T.apply(gamma));
  r.holds = r.lhs == r.rhs;
  if (!r.holds) {
    r.witness = "lhs g = " + vector_string(r.lhs.g) + ", rhs g = " + vector_string(r.rhs.g);
  }
  return r;
}

}  // namespace grext
