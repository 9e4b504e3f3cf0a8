#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "grext/exactnum/number_field.hpp"

namespace oracle {

std::optional<PellPair> pell_bruteforce(long D, long ymax) {
  for (long y = 1; y <= ymax; ++y) {
    for (int norm : {-1, 1}) {
      Integer x2 = Integer(D) * y * y + norm;
      if (x2 <= 0) continue;
      Integer x = sqrt(x2);
      if (x * x == x2) return PellPair{x, Integer(y), norm};
    }
  }
  return std::nullopt;
}

std::vector<std::array<long, 4>> rank2_automorphisms(const grext::EmbeddedLattice& L, long B) {
  const auto& v0 = L.column(0)[0];
  const auto& v1 = L.column(1)[0];
  std::vector<std::array<long, 4>> out;
  for (long a = -B; a <= B; ++a) {
    for (long b = -B; b <= B; ++b) {
      for (long c = -B; c <= B; ++c) {
        for (long d = -B; d <= B; ++d) {
          const long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          auto lambda = (grext::Rational(a) * v0 + grext::Rational(c) * v1) / v0;
          if (lambda * v1 == grext::Rational(b) * v0 + grext::Rational(d) * v1) {
            out.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::size_t roots() {
    std::size_t r = 0;
    for (std::uint32_t i = 0; i < parent.size(); ++i) r += find(i) == i;
    return r;
  }
};

std::vector<int> generating_set(const grext::FiniteGroup& H) {
  std::vector<int> gens;
  std::set<int> span{H.identity()};
  for (int g = 0; g < H.order(); ++g) {
    if (span.count(g)) continue;
    gens.push_back(g);
    std::vector<int> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int s : gens) {
          int y = H.mul(x, s);
          if (span.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

namespace {

// Depth-first enumeration of cocycles; `leaf` receives the mixed-radix code
// (digit i = label of edge i). Edges are visited greedily so that each one
// closes as many triangles as possible; a closed triangle fixes the label.
template <class Leaf>
void enumerate_cocycles(const grext::Nerve& X, const grext::FiniteGroup& H, Leaf&& leaf,
                        const std::vector<std::vector<char>>* allowed = nullptr) {
  const std::size_t E = X.edges().size();
  const std::uint64_t g = static_cast<std::uint64_t>(H.order());
  std::vector<std::array<std::size_t, 3>> tris;
  for (const auto& t : X.triangles()) {
    tris.push_back({static_cast<std::size_t>(X.edge_index(t[0], t[1])),
                    static_cast<std::size_t>(X.edge_index(t[1], t[2])),
                    static_cast<std::size_t>(X.edge_index(t[0], t[2]))});
  }
  std::vector<std::size_t> order;
  std::vector<bool> placed(E, false);
  std::vector<std::vector<std::array<std::size_t, 3>>> ready(E);
  while (order.size() < E) {
    std::size_t best = E;
    int best_closed = -1;
    for (std::size_t e = 0; e < E; ++e) {
      if (placed[e]) continue;
      int closed = 0;
      for (const auto& t : tris) {
        int mine = 0, done = 0;
        for (auto x : t) {
          mine += x == e;
          done += placed[x];
        }
        closed += mine && done == 2;
      }
      if (closed > best_closed) {
        best_closed = closed;
        best = e;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (const auto& t : tris) {
      bool mine = t[0] == best || t[1] == best || t[2] == best;
      if (mine && placed[t[0]] && placed[t[1]] && placed[t[2]]) ready[order.size() - 1].push_back(t);
    }
  }
  std::vector<std::uint64_t> pow(E + 1, 1);
  for (std::size_t i = 1; i <= E; ++i) pow[i] = pow[i - 1] * g;
  std::vector<int> lab(E, 0);
  std::vector<std::uint64_t> partial(E + 1, 0);
  bool stop = false;
  auto forced = [&](std::size_t e, const std::array<std::size_t, 3>& t) {
    if (e == t[2]) return H.mul(lab[t[0]], lab[t[1]]);
    if (e == t[0]) return H.mul(lab[t[2]], H.inv(lab[t[1]]));
    return H.mul(H.inv(lab[t[0]]), lab[t[2]]);
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == E) {
      stop = !leaf(partial[E]);
      return;
    }
    const std::size_t e = order[k];
    auto descend = [&](int h) {
      if (allowed && !(*allowed)[e][static_cast<std::size_t>(h)]) return;
      lab[e] = h;
      for (const auto& t : ready[k]) {
        if (H.mul(lab[t[0]], lab[t[1]]) != lab[t[2]]) return;
      }
      partial[k + 1] = partial[k] + static_cast<std::uint64_t>(h) * pow[e];
      self(self, k + 1);
    };
    if (!ready[k].empty()) {
      descend(forced(e, ready[k][0]));
    } else {
      for (int h = 0; h < H.order() && !stop; ++h) descend(h);
    }
  };
  rec(rec, 0);
}

// Open-addressing index from cocycle code to its position.
class CodeIndex {
 public:
  explicit CodeIndex(const std::vector<std::uint64_t>& codes) : codes_(codes) {
    std::size_t cap = 1;
    while (cap < 2 * codes.size()) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, kEmpty);
    for (std::uint32_t i = 0; i < codes.size(); ++i) {
      std::size_t s = hash(codes[i]);
      while (slots_[s] != kEmpty) s = (s + 1) & mask_;
      slots_[s] = i;
    }
  }
  std::uint32_t find(std::uint64_t code) const {
    std::size_t s = hash(code);
    while (codes_[slots_[s]] != code) s = (s + 1) & mask_;
    return slots_[s];
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
  std::size_t hash(std::uint64_t x) const { return static_cast<std::size_t>((x * 0x9e3779b97f4a7c15ull) >> 20) & mask_; }
  const std::vector<std::uint64_t>& codes_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace

std::size_t cech_cocycle_count(const grext::Nerve& X, const grext::FiniteGroup& H) {
  std::size_t n = 0;
  enumerate_cocycles(X, H, [&](std::uint64_t) {
    ++n;
    return true;
  });
  return n;
}

std::optional<OrbitCount> cech_orbits(const grext::Nerve& X, const grext::FiniteGroup& H,
                                      std::size_t budget) {
  if (cech_cocycle_count(X, H) > budget) return std::nullopt;
  const auto& edges = X.edges();
  const std::size_t E = edges.size();
  const std::uint64_t g = static_cast<std::uint64_t>(H.order());
  std::vector<std::uint64_t> pow(E + 1, 1);
  for (std::size_t i = 1; i <= E; ++i) pow[i] = pow[i - 1] * g;

  std::vector<std::uint64_t> cocycles;
  cocycles.reserve(budget < 4096 ? budget : 4096);
  enumerate_cocycles(X, H, [&](std::uint64_t code) {
    cocycles.push_back(code);
    return true;
  });
  const CodeIndex index(cocycles);

  // Edges touching each vertex, with the side the vertex sits on.
  std::vector<std::vector<std::pair<std::size_t, bool>>> incident(X.vertices().size());
  for (std::size_t i = 0; i < E; ++i) {
    incident[X.vertex_index(edges[i].first)].push_back({i, true});
    incident[X.vertex_index(edges[i].second)].push_back({i, false});
  }
  const auto gens = generating_set(H);
  auto move = [&](std::uint64_t code, int v, int s) {
    std::uint64_t moved = code;
    for (auto [i, first] : incident[X.vertex_index(v)]) {
      const int h = static_cast<int>((code / pow[i]) % g);
      const int m = first ? H.mul(s, h) : H.mul(h, H.inv(s));
      moved = moved - static_cast<std::uint64_t>(h) * pow[i] + static_cast<std::uint64_t>(m) * pow[i];
    }
    return moved;
  };
  // Pointed classes: gauge at every vertex but the basepoint.
  UnionFind uf(cocycles.size());
  for (std::uint32_t idx = 0; idx < cocycles.size(); ++idx) {
    for (int v : X.vertices()) {
      if (v == X.basepoint()) continue;
      for (int s : gens) uf.unite(idx, index.find(move(cocycles[idx], v, s)));
    }
  }
  // The basepoint gauge commutes with the rest, so it acts on pointed
  // classes through any representative.
  std::vector<std::uint32_t> reps;
  for (std::uint32_t idx = 0; idx < cocycles.size(); ++idx)
    if (uf.find(idx) == idx) reps.push_back(idx);
  for (auto r : reps)
    for (int s : gens) uf.unite(r, index.find(move(cocycles[r], X.basepoint(), s)));
  return OrbitCount{cocycles.size(), reps.size(), uf.roots()};
}

OrbitCount cech_orbits_burnside(const grext::Nerve& X, const grext::FiniteGroup& H) {
  const std::size_t all = cech_cocycle_count(X, H);
  const auto& edges = X.edges();
  const std::size_t V = X.vertices().size();
  const std::size_t bp = X.vertex_index(X.basepoint());
  const int g = H.order();
  // Conjugacy classes.
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  for (int a = 0; a < g; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g; ++x) {
      int c = H.conj(x, a);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        cls.push_back(c);
      }
    }
    classes.push_back(cls);
  }
  // Σ_k |Fix(k)| over gauges k: V -> H. A fixed cocycle forces k_a and k_b
  // to be conjugate along every edge, so on a connected nerve only gauges
  // with all values in one class contribute.
  auto fixed_sum = [&](bool pointed) {
    std::size_t total = 0;
    for (const auto& cls : classes) {
      if (pointed && cls.front() != H.identity()) continue;
      std::vector<std::size_t> digit(V, 0);
      for (;;) {
        std::vector<int> k(V);
        for (std::size_t v = 0; v < V; ++v) k[v] = cls[digit[v]];
        if (!pointed || k[bp] == H.identity()) {
          std::vector<std::vector<char>> allowed(edges.size(), std::vector<char>(static_cast<std::size_t>(g), 0));
          bool everything = true;
          for (std::size_t e = 0; e < edges.size(); ++e) {
            int ka = k[X.vertex_index(edges[e].first)], kb = k[X.vertex_index(edges[e].second)];
            for (int h = 0; h < g; ++h) {
              bool ok = H.mul(ka, h) == H.mul(h, kb);
              allowed[e][static_cast<std::size_t>(h)] = ok;
              everything = everything && ok;
            }
          }
          if (everything) {
            total += all;
          } else {
            std::size_t n = 0;
            enumerate_cocycles(X, H, [&](std::uint64_t) {
              ++n;
              return true;
            }, &allowed);
            total += n;
          }
        }
        std::size_t v = 0;
        while (v < V && ++digit[v] == cls.size()) digit[v++] = 0;
        if (v == V) break;
      }
    }
    return total;
  };
  std::size_t K = 1;
  for (std::size_t v = 0; v + 1 < V; ++v) K *= static_cast<std::size_t>(g);
  return OrbitCount{all, fixed_sum(true) / K, fixed_sum(false) / (K * static_cast<std::size_t>(g))};
}

std::size_t h2_order_cochains(const grext::Nerve& X, long m) {
  const auto& tri = X.triangles();
  const auto& tets = X.tetrahedra();
  const std::size_t E = X.edges().size();
  const std::size_t T = tri.size();
  auto tri_index = [&](int a, int b, int c) {
    return static_cast<std::size_t>(std::find(tri.begin(), tri.end(), grext::Triangle{a, b, c}) - tri.begin());
  };
  auto encode = [&](const std::vector<long>& v) {
    std::size_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * static_cast<std::size_t>(m) + static_cast<std::size_t>(v[i]);
    return code;
  };
  auto next = [&](std::vector<long>& v) {
    for (auto& x : v) {
      if (++x < m) return true;
      x = 0;
    }
    return false;
  };
  // Cocycles: (δf)(abcd) = f(bcd) - f(acd) + f(abd) - f(abc) = 0.
  std::size_t kernel = 0;
  std::vector<long> f(T, 0);
  do {
    bool closed = true;
    for (const auto& t : tets) {
      long s = f[tri_index(t[1], t[2], t[3])] - f[tri_index(t[0], t[2], t[3])] +
               f[tri_index(t[0], t[1], t[3])] - f[tri_index(t[0], t[1], t[2])];
      if (((s % m) + m) % m) {
        closed = false;
        break;
      }
    }
    kernel += closed;
  } while (next(f));
  // Coboundaries: (δc)(abc) = c(bc) - c(ac) + c(ab).
  std::set<std::size_t> image;
  std::vector<long> c(E, 0);
  do {
    std::vector<long> d(T);
    for (std::size_t i = 0; i < T; ++i) {
      const auto& t = tri[i];
      long s = c[static_cast<std::size_t>(X.edge_index(t[1], t[2]))] -
               c[static_cast<std::size_t>(X.edge_index(t[0], t[2]))] +
               c[static_cast<std::size_t>(X.edge_index(t[0], t[1]))];
      d[i] = ((s % m) + m) % m;
    }
    image.insert(encode(d));
  } while (next(c));
  return kernel / image.size();
}

}  // namespace oracle
