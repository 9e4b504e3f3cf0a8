#include "grext/classify/cocycle.hpp"

#include <algorithm>

namespace grext {

CoefficientGroup CoefficientGroup::finite(FiniteGroup g) {
  CoefficientGroup G;
  G.kind_ = Kind::FiniteTable;
  G.name_ = g.name();
  G.abelian_ = g.is_abelian();
  G.finite_ = std::move(g);
  return G;
}

CoefficientGroup CoefficientGroup::abelian(AbelianInvariants inv) {
  CoefficientGroup G;
  G.kind_ = Kind::FgAbelian;
  G.name_ = inv.name();
  G.abelian_ = true;
  G.inv_ = std::move(inv);
  return G;
}

CoefficientGroup CoefficientGroup::aut_rho(const GroupDescriptor& aut, std::size_t rank) {
  CoefficientGroup G;
  G.kind_ = Kind::AutRho;
  G.name_ = aut.name;
  G.rank_ = rank;
  G.abelian_ = true;
  for (const auto& a : aut.generators) {
    for (const auto& b : aut.generators) {
      if (!(a.T * b.T == b.T * a.T)) G.abelian_ = false;
    }
  }
  return G;
}

CoeffElement CoefficientGroup::identity() const {
  switch (kind_) {
    case Kind::FiniteTable: return {Integer(0)};
    case Kind::FgAbelian: return CoeffElement(inv_.torsion.size() + inv_.free_rank, Integer(0));
    case Kind::AutRho: return from_matrix(IntegerMatrix::identity(rank_));
  }
  return {};
}

CoeffElement CoefficientGroup::from_matrix(const IntegerMatrix& T) const { return T.entries(); }

IntegerMatrix CoefficientGroup::matrix(const CoeffElement& a) const {
  IntegerMatrix T(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) T(i, j) = a[i * rank_ + j];
  }
  return T;
}

CoeffElement CoefficientGroup::mul(const CoeffElement& a, const CoeffElement& b) const {
  switch (kind_) {
    case Kind::FiniteTable: return from_index(finite_.mul(index(a), index(b)));
    case Kind::FgAbelian: {
      CoeffElement c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
        if (i < inv_.torsion.size()) mpz_fdiv_r(c[i].get_mpz_t(), c[i].get_mpz_t(), inv_.torsion[i].get_mpz_t());
      }
      return c;
    }
    case Kind::AutRho: return from_matrix(matrix(a) * matrix(b));
  }
  return {};
}

CoeffElement CoefficientGroup::inv(const CoeffElement& a) const {
  switch (kind_) {
    case Kind::FiniteTable: return from_index(finite_.inv(index(a)));
    case Kind::FgAbelian: {
      CoeffElement c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = -a[i];
        if (i < inv_.torsion.size()) mpz_fdiv_r(c[i].get_mpz_t(), c[i].get_mpz_t(), inv_.torsion[i].get_mpz_t());
      }
      return c;
    }
    case Kind::AutRho: {
      auto m = matrix(a).unimodular_inverse();
      if (!m) fail("NotAnElement", matrix(a).to_string(), ErrorClass::Internal);
      return from_matrix(*m);
    }
  }
  return {};
}

void CoefficientGroup::validate(const CoeffElement& a) const {
  switch (kind_) {
    case Kind::FiniteTable:
      if (a.size() != 1 || a[0] < 0 || a[0] >= finite_.order()) fail("NotAnElement", element_string(a));
      return;
    case Kind::FgAbelian:
      if (a.size() != inv_.torsion.size() + inv_.free_rank) fail("NotAnElement", "wrong length");
      for (std::size_t i = 0; i < inv_.torsion.size(); ++i) {
        if (a[i] < 0 || a[i] >= inv_.torsion[i]) fail("NotAnElement", element_string(a));
      }
      return;
    case Kind::AutRho:
      if (a.size() != rank_ * rank_ || !matrix(a).is_unimodular()) fail("NotAnElement", "not in GL_N(Z)");
      return;
  }
}

std::string CoefficientGroup::element_string(const CoeffElement& a) const {
  switch (kind_) {
    case Kind::FiniteTable:
      if (a.size() == 1 && a[0] >= 0 && a[0] < finite_.order()) return finite_.element_name(index(a));
      break;
    case Kind::AutRho: return matrix(a).to_string();
    case Kind::FgAbelian: break;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
  return s + ")";
}

bool CoefficientGroup::simultaneously_conjugate(const std::vector<CoeffElement>& a,
                                                const std::vector<CoeffElement>& b) const {
  if (a.size() != b.size()) return false;
  if (abelian_) return a == b;
  if (kind_ != Kind::FiniteTable) fail("UndecidableCoefficients", "conjugacy in " + name_);
  for (int h = 0; h < finite_.order(); ++h) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i) all = finite_.conj(h, index(a[i])) == index(b[i]);
    if (all) return true;
  }
  return false;
}

CoeffElement Cocycle::label(int i, int j) const {
  if (i == j) return group->identity();
  long e = nerve.edge_index(i, j);
  if (e < 0) fail("NotAnEdge", "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  const auto& l = labels[static_cast<std::size_t>(e)];
  return i < j ? l : group->inv(l);
}

Cocycle make_cocycle(const Nerve& X, std::shared_ptr<const CoefficientGroup> G, std::vector<CoeffElement> labels) {
  if (labels.size() != X.edges().size()) {
    fail("LabelsIncomplete", std::to_string(labels.size()) + " labels for " + std::to_string(X.edges().size()) + " edges");
  }
  for (const auto& l : labels) G->validate(l);
  return Cocycle{X, std::move(G), std::move(labels)};
}

Cocycle trivial_cocycle(const Nerve& X, std::shared_ptr<const CoefficientGroup> G) {
  std::vector<CoeffElement> labels(X.edges().size(), G->identity());
  return Cocycle{X, std::move(G), std::move(labels)};
}

CocycleReport check_cocycle(const Cocycle& c) {
  CocycleReport r;
  const auto& G = *c.group;
  auto bad = [&](const std::string& w) {
    r.ok = false;
    if (r.failures.size() < 16) r.failures.push_back(w);
  };
  for (int v : c.nerve.vertices()) {
    ++r.checks;
    if (c.label(v, v) != G.identity()) bad("unit at " + std::to_string(v));
  }
  for (const auto& [a, b] : c.nerve.edges()) {
    ++r.checks;
    if (G.mul(c.label(a, b), c.label(b, a)) != G.identity()) {
      bad("inverse on (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  for (const auto& t : c.nerve.triangles()) {
    ++r.checks;
    if (G.mul(c.label(t[0], t[1]), c.label(t[1], t[2])) != c.label(t[0], t[2])) {
      bad("triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
  }
  return r;
}

Cocycle apply_coboundary(const Cocycle& c, const std::vector<CoeffElement>& chain0) {
  const auto& X = c.nerve;
  if (chain0.size() != X.vertices().size()) fail("ChainShape", "one value per vertex required");
  for (const auto& v : chain0) c.group->validate(v);
  Cocycle out = c;
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    const auto& [a, b] = X.edges()[e];
    out.labels[e] = c.group->mul(c.group->mul(chain0[X.vertex_index(a)], c.labels[e]),
                                 c.group->inv(chain0[X.vertex_index(b)]));
  }
  auto rep = check_cocycle(out);
  if (!rep.ok) fail("CoboundaryBroke", rep.failures.front(), ErrorClass::Internal);
  return out;
}

Holonomy holonomy(const Cocycle& c) {
  const auto& X = c.nerve;
  const auto& G = *c.group;
  Holonomy h;
  h.presentation = edge_path_group(X);
  const auto& P = h.presentation;
  // path[v] = product of labels along the tree path from the basepoint to v.
  std::vector<CoeffElement> path(X.vertices().size());
  for (int v : P.bfs_order) {
    std::size_t vi = X.vertex_index(v);
    int u = P.parent[vi];
    path[vi] = u == v ? G.identity() : G.mul(path[X.vertex_index(u)], c.label(u, v));
  }
  h.images.assign(P.group.generators.size(), G.identity());
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    long g = P.edge_generator[e];
    if (g < 0) continue;
    const auto& [a, b] = X.edges()[e];
    h.images[static_cast<std::size_t>(g)] =
        G.mul(G.mul(path[X.vertex_index(a)], c.labels[e]), G.inv(path[X.vertex_index(b)]));
  }
  for (const auto& r : P.group.relators) {
    CoeffElement acc = G.identity();
    for (int x : r) {
      const auto& im = h.images[static_cast<std::size_t>(std::abs(x) - 1)];
      acc = G.mul(acc, x > 0 ? im : G.inv(im));
    }
    if (acc != G.identity()) fail("RelatorNotKilled", P.group.word_string(r));
  }
  return h;
}

bool cohomologous(const Cocycle& a, const Cocycle& b, bool pointed) {
  if (a.nerve.edges() != b.nerve.edges() || a.nerve.triangles() != b.nerve.triangles() || a.group->name() != b.group->name()) {
    fail("MismatchedCocycles", "different nerves or coefficients");
  }
  auto ha = holonomy(a), hb = holonomy(b);
  if (pointed) return ha.images == hb.images;
  return a.group->simultaneously_conjugate(ha.images, hb.images);
}

Cocycle pullback_cocycle(const Nerve& source, const std::map<int, int>& f, const Cocycle& c) {
  auto image = [&](int v) {
    auto it = f.find(v);
    if (it == f.end()) fail("NotSimplicial", "vertex " + std::to_string(v) + " has no image");
    c.nerve.vertex_index(it->second);
    return it->second;
  };
  std::vector<CoeffElement> labels;
  for (const auto& [a, b] : source.edges()) {
    int fa = image(a), fb = image(b);
    if (fa != fb && c.nerve.edge_index(fa, fb) < 0) {
      fail("NotSimplicial", "edge (" + std::to_string(a) + "," + std::to_string(b) + ") maps to a non-edge");
    }
    labels.push_back(c.label(fa, fb));
  }
  for (const auto& t : source.triangles()) {
    std::vector<int> im = {image(t[0]), image(t[1]), image(t[2])};
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    if (im.size() == 3 && !c.nerve.has_triangle({im[0], im[1], im[2]})) {
      fail("NotSimplicial", "triangle maps to a non-simplex");
    }
  }
  Cocycle out{source, c.group, std::move(labels)};
  return out;
}

}  // namespace grext
