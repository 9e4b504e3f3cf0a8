#include "grext/classify/groupoid_nerve.hpp"

#include <algorithm>
#include <cstdlib>

#include "grext/error.hpp"

namespace grext {

FiniteAction FiniteAction::point(const FiniteGroup& g) {
  FiniteAction a{g, 1, std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()), std::vector<int>{0})};
  return a;
}

FiniteAction FiniteAction::regular(const FiniteGroup& g) {
  FiniteAction a{g, static_cast<std::size_t>(g.order()), {}};
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> row;
    for (int y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    a.action.push_back(row);
  }
  return a;
}

void validate_action(const FiniteAction& A) {
  const auto& G = A.group;
  if (A.action.size() != static_cast<std::size_t>(G.order())) fail("NotAnAction", "one row per group element required");
  for (std::size_t g = 0; g < A.action.size(); ++g) {
    const auto& row = A.action[g];
    if (row.size() != A.size) fail("NotAnAction", "row " + std::to_string(g) + " has the wrong length");
    std::vector<bool> hit(A.size);
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= A.size || hit[static_cast<std::size_t>(x)]) {
        fail("NotAnAction", "row " + std::to_string(g) + " is not a permutation");
      }
      hit[static_cast<std::size_t>(x)] = true;
    }
  }
  for (std::size_t x = 0; x < A.size; ++x) {
    if (A.action[0][x] != static_cast<int>(x)) fail("NotAnAction", "identity moves " + std::to_string(x));
  }
  for (int g = 0; g < G.order(); ++g) {
    for (int h = 0; h < G.order(); ++h) {
      for (std::size_t x = 0; x < A.size; ++x) {
        int lhs = A.action[static_cast<std::size_t>(G.mul(g, h))][x];
        int rhs = A.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(A.action[static_cast<std::size_t>(h)][x])];
        if (lhs != rhs) {
          fail("NotAnAction", "(gh).x != g.(h.x) for g=" + std::to_string(g) + ", h=" + std::to_string(h) +
                                  ", x=" + std::to_string(x));
        }
      }
    }
  }
}

GroupoidNerveReport groupoid_nerve(const FiniteAction& A) {
  validate_action(A);
  const auto& G = A.group;
  const std::size_t n = static_cast<std::size_t>(G.order());
  GroupoidNerveReport rep;
  rep.group = G.name();
  rep.set_size = A.size;
  std::size_t all = A.size, nd = A.size;
  for (int k = 0; k <= 3; ++k) {
    rep.simplices.push_back(all);
    rep.nondegenerate.push_back(nd);
    all *= n;
    nd *= n - 1;
  }
  auto act = [&](int g, int x) { return A.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; };

  std::vector<bool> seen(A.size);
  for (std::size_t x0 = 0; x0 < A.size; ++x0) {
    if (seen[x0]) continue;
    ComponentReport c;
    c.basepoint = static_cast<int>(x0);
    // BFS tree: reach[x] carries x0 to x; the discovering edge (g, parent) is a tree edge.
    std::vector<int> reach(A.size, -1), orbit;
    std::vector<std::vector<bool>> tree(n, std::vector<bool>(A.size));
    reach[x0] = 0;
    orbit.push_back(static_cast<int>(x0));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int g = 1; g < G.order(); ++g) {
        int y = act(g, orbit[i]);
        if (reach[static_cast<std::size_t>(y)] < 0) {
          reach[static_cast<std::size_t>(y)] = G.mul(g, reach[static_cast<std::size_t>(orbit[i])]);
          tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(orbit[i])] = true;
          orbit.push_back(y);
        }
      }
    }
    for (int y : orbit) seen[static_cast<std::size_t>(y)] = true;
    std::sort(orbit.begin(), orbit.end());
    c.orbit_size = orbit.size();
    c.stabilizer_order = n / orbit.size();

    // Edges (g, x): x → g.x; identity edges are degenerate.
    FPGroup presentation;
    std::vector<long> gen(n * A.size, -1);
    for (int x : orbit) {
      for (int g = 1; g < G.order(); ++g) {
        if (tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]) continue;
        gen[static_cast<std::size_t>(g) * A.size + static_cast<std::size_t>(x)] =
            static_cast<long>(presentation.generators.size());
        presentation.generators.push_back("[" + G.element_name(g) + "," + std::to_string(x) + "]");
      }
    }
    auto letter = [&](int g, int x, Word& w, bool inverse) {
      long k = g == 0 ? -1 : gen[static_cast<std::size_t>(g) * A.size + static_cast<std::size_t>(x)];
      if (k >= 0) w.push_back(inverse ? -static_cast<int>(k) - 1 : static_cast<int>(k) + 1);
    };
    // 2-simplex (g, h) at x: edges (g, x), (h, g.x), (hg, x).
    for (int x : orbit) {
      for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h) {
          Word w;
          letter(g, x, w, false);
          letter(h, act(g, x), w, false);
          letter(G.mul(h, g), x, w, true);
          presentation.relators.push_back(w);
        }
      }
    }
    auto S = simplify(presentation);
    c.pi1 = S.group;
    c.abelianization = abelianization(S.group).name();
    c.order = todd_coxeter_order(S.group, 100000);

    // Paths compose left to right, so edge (g, x) goes to reach[x]⁻¹ · g⁻¹ · reach[g.x] in Stab(x0).
    auto image = [&](int g, int x) {
      return G.mul(G.mul(G.inv(reach[static_cast<std::size_t>(x)]), G.inv(g)), reach[static_cast<std::size_t>(act(g, x))]);
    };
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g) if (act(g, static_cast<int>(x0)) == static_cast<int>(x0)) stab.push_back(g);
    // Abelianization of the stabilizer from its own edge-path presentation on a point.
    {
      FPGroup sp;
      std::vector<int> idx(n, -1);
      for (int s : stab) {
        if (s == 0) continue;
        idx[static_cast<std::size_t>(s)] = static_cast<int>(sp.generators.size());
        sp.generators.push_back(G.element_name(s));
      }
      for (int s : stab) {
        for (int t : stab) {
          Word w;
          if (s) w.push_back(idx[static_cast<std::size_t>(s)] + 1);
          if (t) w.push_back(idx[static_cast<std::size_t>(t)] + 1);
          int st = G.mul(t, s);
          if (st) w.push_back(-idx[static_cast<std::size_t>(st)] - 1);
          sp.relators.push_back(w);
        }
      }
      c.abelian_match = abelianization(sp).name() == c.abelianization;
    }
    if (n <= 24) {
      // Generators of the simplified group are original edge generators.
      bool hom = true;
      std::vector<int> original;
      for (int x : orbit) {
        for (int g = 1; g < G.order(); ++g) {
          if (gen[static_cast<std::size_t>(g) * A.size + static_cast<std::size_t>(x)] >= 0) original.push_back(image(g, x));
        }
      }
      for (const auto& r : presentation.relators) {
        int acc = 0;
        for (int l : r) {
          int im = original[static_cast<std::size_t>(std::abs(l) - 1)];
          acc = G.mul(acc, l > 0 ? im : G.inv(im));
        }
        hom = hom && acc == 0;
      }
      std::vector<int> images;
      for (const auto& name : S.group.generators) {
        for (std::size_t k = 0; k < presentation.generators.size(); ++k) {
          if (presentation.generators[k] == name) images.push_back(original[k]);
        }
      }
      auto generated = G.subgroup_generated(images);
      std::sort(generated.begin(), generated.end());
      bool onto = generated == stab;
      bool same_order = c.order && *c.order == stab.size();
      c.isomorphism_certified = hom && onto && same_order;
      c.certificate = std::string("edge (g,x) ↦ c(x)⁻¹·g⁻¹·c(g.x): ") + (hom ? "homomorphism" : "not a homomorphism") +
                      ", " + (onto ? "onto" : "not onto") + " Stab(" + std::to_string(x0) + ")" +
                      ", orders " + (c.order ? std::to_string(*c.order) : std::string("?")) + " and " +
                      std::to_string(stab.size());
    }
    rep.components.push_back(std::move(c));
  }
  return rep;
}

}  // namespace grext
