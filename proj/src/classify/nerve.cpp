#include "grext/classify/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "grext/error.hpp"

namespace grext {

namespace {

std::string edge_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

template <std::size_t K>
std::string simplex_str(const std::array<int, K>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < K; ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t Nerve::vertex_index(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) fail("UnknownVertex", std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

long Nerve::edge_index(int a, int b) const {
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return it - edges_.begin();
}

bool Nerve::has_triangle(const Triangle& t) const {
  Triangle s = t;
  std::sort(s.begin(), s.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), s);
}

std::vector<int> Nerve::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long Nerve::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
         static_cast<long>(triangles_.size()) - static_cast<long>(tetrahedra_.size());
}

Nerve make_nerve(std::string name, std::vector<int> vertices, std::vector<Edge> edges,
                 std::vector<Triangle> triangles, int basepoint, std::vector<Tetrahedron> tetrahedra) {
  Nerve X;
  X.name_ = std::move(name);
  sort_unique(vertices);
  if (vertices.empty()) fail("DisconnectedSkeleton", "no vertices");
  auto known = [&](int v) {
    if (!std::binary_search(vertices.begin(), vertices.end(), v)) fail("UnknownVertex", std::to_string(v));
  };
  for (auto& e : edges) {
    known(e.first);
    known(e.second);
    if (e.first == e.second) fail("BadSimplex", edge_str(e.first, e.second));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  sort_unique(edges);
  for (auto& t : triangles) {
    for (int v : t) known(v);
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) fail("BadSimplex", simplex_str(t));
  }
  sort_unique(triangles);
  for (auto& t : tetrahedra) {
    for (int v : t) known(v);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) fail("BadSimplex", simplex_str(t));
  }
  sort_unique(tetrahedra);
  X.vertices_ = std::move(vertices);
  X.edges_ = std::move(edges);
  X.triangles_ = std::move(triangles);
  X.tetrahedra_ = std::move(tetrahedra);

  for (const auto& t : X.triangles_) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
      if (X.edge_index(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]) < 0) {
        fail("MissingEdgeOfTriangle", simplex_str(t) + " lacks " +
                                          edge_str(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]));
      }
    }
  }
  for (const auto& s : X.tetrahedra_) {
    for (std::size_t skip = 0; skip < 4; ++skip) {
      Triangle f{};
      std::size_t k = 0;
      for (std::size_t i = 0; i < 4; ++i) if (i != skip) f[k++] = s[i];
      if (!X.has_triangle(f)) fail("MissingFaceOfTetrahedron", simplex_str(s) + " lacks " + simplex_str(f));
    }
  }
  if (!std::binary_search(X.vertices_.begin(), X.vertices_.end(), basepoint)) {
    fail("BadBasepoint", std::to_string(basepoint));
  }
  X.basepoint_ = basepoint;

  std::vector<bool> seen(X.vertices_.size());
  std::queue<int> q;
  q.push(basepoint);
  seen[X.vertex_index(basepoint)] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : X.neighbours(v)) {
      if (!seen[X.vertex_index(w)]) {
        seen[X.vertex_index(w)] = true;
        q.push(w);
      }
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) fail("DisconnectedSkeleton", "vertex " + std::to_string(X.vertices_[i]) + " unreachable");
  }
  return X;
}

std::vector<std::string> nerve_preset_names() { return {"circle", "circle6", "point", "sphere", "torus"}; }

Nerve nerve_preset(const std::string& name) {
  if (name == "point") return make_nerve(name, {0}, {}, {}, 0);
  if (name == "circle") return make_nerve(name, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}, {}, 0);
  if (name == "circle6") {
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i) e.push_back({i, (i + 1) % 6});
    return make_nerve(name, {0, 1, 2, 3, 4, 5}, e, {}, 0);
  }
  if (name == "sphere") {
    return make_nerve(name, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 0);
  }
  if (name == "torus") {
    // Möbius–Császár: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<Triangle> t;
    std::vector<Edge> e;
    for (int i = 0; i < 7; ++i) {
      t.push_back({i, (i + 1) % 7, (i + 3) % 7});
      t.push_back({i, (i + 2) % 7, (i + 3) % 7});
      for (int j = i + 1; j < 7; ++j) e.push_back({i, j});
    }
    return make_nerve(name, {0, 1, 2, 3, 4, 5, 6}, e, t, 0);
  }
  fail("UnknownPreset", name);
}

IntegerMatrix boundary_matrix(const Nerve& X, int k) {
  auto count = [&](int d) -> std::size_t {
    switch (d) {
      case 0: return X.vertices().size();
      case 1: return X.edges().size();
      case 2: return X.triangles().size();
      case 3: return X.tetrahedra().size();
      default: return 0;
    }
  };
  IntegerMatrix m(count(k - 1), count(k));
  if (k == 1) {
    for (std::size_t j = 0; j < X.edges().size(); ++j) {
      m(X.vertex_index(X.edges()[j].second), j) += 1;
      m(X.vertex_index(X.edges()[j].first), j) -= 1;
    }
  } else if (k == 2) {
    for (std::size_t j = 0; j < X.triangles().size(); ++j) {
      const auto& t = X.triangles()[j];
      m(static_cast<std::size_t>(X.edge_index(t[1], t[2])), j) += 1;
      m(static_cast<std::size_t>(X.edge_index(t[0], t[2])), j) -= 1;
      m(static_cast<std::size_t>(X.edge_index(t[0], t[1])), j) += 1;
    }
  } else if (k == 3) {
    auto tri_index = [&](Triangle f) {
      auto it = std::lower_bound(X.triangles().begin(), X.triangles().end(), f);
      return static_cast<std::size_t>(it - X.triangles().begin());
    };
    for (std::size_t j = 0; j < X.tetrahedra().size(); ++j) {
      const auto& s = X.tetrahedra()[j];
      m(tri_index({s[1], s[2], s[3]}), j) += 1;
      m(tri_index({s[0], s[2], s[3]}), j) -= 1;
      m(tri_index({s[0], s[1], s[3]}), j) += 1;
      m(tri_index({s[0], s[1], s[2]}), j) -= 1;
    }
  }
  return m;
}

AbelianInvariants simplicial_homology(const Nerve& X, int k) {
  if (k < 0) return {};
  IntegerMatrix dk = boundary_matrix(X, k);
  IntegerMatrix dk1 = boundary_matrix(X, k + 1);
  std::size_t rank_k = k == 0 || !dk.rows() || !dk.cols() ? 0 : smith_normal_form(dk).rank();
  auto factors = dk1.rows() && dk1.cols() ? smith_normal_form(dk1).invariant_factors() : std::vector<Integer>{};
  std::vector<Integer> orders;
  for (const auto& f : factors) if (f != 1) orders.push_back(f);
  std::size_t cycles = dk.cols() - rank_k;
  for (std::size_t i = 0; i < cycles - factors.size(); ++i) orders.push_back(Integer(0));
  return AbelianInvariants::from_cyclic_orders(orders);
}

AbelianInvariants simplicial_cohomology(const Nerve& X, int k, long m) {
  AbelianInvariants hk = simplicial_homology(X, k);
  AbelianInvariants hk1 = simplicial_homology(X, k - 1);
  std::vector<Integer> orders;
  if (m == 0) {
    // Hom(H_k, Z) ⊕ Ext(H_{k-1}, Z).
    for (std::size_t i = 0; i < hk.free_rank; ++i) orders.push_back(Integer(0));
    for (const auto& t : hk1.torsion) orders.push_back(t);
  } else {
    Integer mm(m);
    auto g = [&](const Integer& t) {
      Integer out;
      mpz_gcd(out.get_mpz_t(), t.get_mpz_t(), mm.get_mpz_t());
      return out;
    };
    for (std::size_t i = 0; i < hk.free_rank; ++i) orders.push_back(mm);
    for (const auto& t : hk.torsion) orders.push_back(g(t));
    for (const auto& t : hk1.torsion) orders.push_back(g(t));
  }
  std::vector<Integer> nontrivial;
  for (const auto& o : orders) if (o != 1) nontrivial.push_back(o);
  return AbelianInvariants::from_cyclic_orders(nontrivial);
}

}  // namespace grext
