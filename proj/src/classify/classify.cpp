#include "grext/classify/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace grext {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget, const std::string& what) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base && total > budget / base) {
      fail("SpecTooLarge", what + " exceeds budget " + std::to_string(budget));
    }
    total *= base;
  }
  if (total > budget) fail("SpecTooLarge", what + " exceeds budget " + std::to_string(budget));
  return total;
}

bool kills_relators(const FPGroup& G, const FiniteGroup& H, const std::vector<int>& img) {
  for (const auto& r : G.relators) {
    int acc = 0;
    for (int x : r) {
      int g = img[static_cast<std::size_t>(std::abs(x) - 1)];
      acc = H.mul(acc, x > 0 ? g : H.inv(g));
    }
    if (acc != 0) return false;
  }
  return true;
}

std::vector<int> decode(std::size_t k, std::size_t gens, std::size_t n) {
  std::vector<int> img(gens);
  for (std::size_t i = gens; i-- > 0;) {
    img[i] = static_cast<int>(k % n);
    k /= n;
  }
  return img;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs_serial(const FPGroup& G, const FiniteGroup& H, std::size_t budget) {
  const std::size_t g = G.generators.size();
  checked_power(static_cast<std::size_t>(H.order()), g, budget, "Hom enumeration");
  std::vector<std::vector<int>> out;
  std::vector<int> img(g, 0);
  for (;;) {
    if (kills_relators(G, H, img)) out.push_back(img);
    std::size_t i = g;
    while (i > 0 && img[i - 1] == H.order() - 1) img[--i] = 0;
    if (i == 0) break;
    ++img[i - 1];
  }
  return out;
}

std::vector<std::vector<int>> enumerate_homs_parallel(const FPGroup& G, const FiniteGroup& H, std::size_t budget) {
  const std::size_t g = G.generators.size();
  const std::size_t n = static_cast<std::size_t>(H.order());
  const std::size_t total = checked_power(n, g, budget, "Hom enumeration");
  std::vector<unsigned char> ok(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k) {
    ok[static_cast<std::size_t>(k)] = kills_relators(G, H, decode(static_cast<std::size_t>(k), g, n));
  }
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < total; ++k) {
    if (ok[k]) out.push_back(decode(k, g, n));
  }
  return out;
}

FiniteClassification classify_finite(const Nerve& X, const FiniteGroup& H, bool parallel, std::size_t budget) {
  FiniteClassification c;
  c.nerve = X.name();
  c.group = H.name();
  auto S = simplify(edge_path_group(X).group);
  c.pi1 = S.group.to_string();
  auto homs = parallel ? enumerate_homs_parallel(S.group, H, budget) : enumerate_homs_serial(S.group, H, budget);
  c.pointed = homs.size();
  std::vector<std::vector<int>> canon;
  for (const auto& h : homs) {
    std::vector<int> best = h;
    for (int x = 0; x < H.order(); ++x) {
      std::vector<int> y(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) y[i] = H.conj(x, h[i]);
      best = std::min(best, y);
    }
    canon.push_back(best);
  }
  std::sort(canon.begin(), canon.end());
  c.free = static_cast<std::size_t>(std::unique(canon.begin(), canon.end()) - canon.begin());
  return c;
}

ClassifyMode parse_classify_mode(const std::string& s) {
  if (s == "pointed-iso") return ClassifyMode::PointedIso;
  if (s == "iso") return ClassifyMode::Iso;
  if (s == "equivalence") return ClassifyMode::Equivalence;
  fail("UnknownMode", s);
}

std::string mode_name(ClassifyMode m) {
  switch (m) {
    case ClassifyMode::PointedIso: return "pointed-iso";
    case ClassifyMode::Iso: return "iso";
    case ClassifyMode::Equivalence: return "equivalence";
  }
  return "";
}

ClassificationReport classify_extensions(const GroupDescriptor& aut, std::size_t rank, const Nerve& X,
                                         ClassifyMode mode) {
  ClassificationReport r;
  r.mode = mode_name(mode);
  r.nerve = X.name();
  r.coefficients = aut.name;
  r.complete = aut.complete;
  if (!aut.complete) r.flags.push_back("IncompleteAutRho: classes computed for a verified subgroup");
  auto S = simplify(edge_path_group(X).group);
  r.pi1 = S.group.to_string();
  const AbelianInvariants ab = abelianization(S.group);
  r.pi1_abelianization = ab.name();
  const bool trivial_pi1 = S.group.generators.empty();
  auto set_count = [&](const AbelianInvariants& a) {
    if (auto o = a.order()) r.count = o->get_str();
  };

  if (mode == ClassifyMode::Equivalence) {
    // Hom(π₁, Out(ρ)) base; H²(X; Γ₀) fiber with Γ₀ = Γ = Z^N.
    const AbelianInvariants fiber = simplicial_cohomology(X, 2, 0).power(rank);
    r.fiber = fiber.name();
    AbelianInvariants base;
    if (trivial_pi1) {
      r.base = "trivial";
    } else if (aut.invariants) {
      base = abelian_hom(ab, *aut.invariants);
      r.base = base.name();
    } else {
      r.base = "Hom(π₁, " + aut.name + ")";
      r.complete = false;
    }
    if (r.base == "trivial") {
      r.classes = r.fiber;
      set_count(fiber);
    } else if (fiber.is_trivial()) {
      r.classes = r.base;
      if (aut.invariants) set_count(base);
    } else {
      r.classes = r.base + " base, " + r.fiber + " torsor fiber";
      r.flags.push_back("fiber computed for the trivial local system");
    }
    return r;
  }

  if (trivial_pi1) {
    r.classes = "single class";
    r.count = "1";
    return r;
  }
  if (aut.invariants) {
    // Abelian coefficients: Hom(π₁, A) = Hom(π₁^ab, A), conjugation trivial.
    AbelianInvariants h = abelian_hom(ab, *aut.invariants);
    r.classes = h.name();
    set_count(h);
    return r;
  }
  r.complete = false;
  r.classes = mode == ClassifyMode::PointedIso ? "Hom(π₁, " + aut.name + ")"
                                               : "Hom(π₁, " + aut.name + ") / conjugation";
  return r;
}

FiniteGroup finite_quotient(const GroupDescriptor& aut, int n) {
  if (!aut.invariants) fail("UndecidableCoefficients", aut.name + " has no abelian invariants");
  if (n < 1) fail("BadQuotient", std::to_string(n));
  FiniteGroup out = FiniteGroup::trivial();
  bool first = true;
  auto add = [&](const FiniteGroup& g) {
    out = first ? g : FiniteGroup::direct_product(out, g);
    first = false;
  };
  for (const auto& t : aut.invariants->torsion) add(FiniteGroup::cyclic(static_cast<int>(t.get_si())));
  for (std::size_t i = 0; i < aut.invariants->free_rank; ++i) add(FiniteGroup::cyclic(n));
  return out;
}

namespace {

struct CrossedEnumerator {
  const Nerve& X;
  const FiniteCrossedModule& M;
  std::size_t ne, nt;
  std::vector<std::vector<int>> fibre;  // μ⁻¹(e)

  // Encoding: edge labels in E, then triangle labels in Γ.
  int h(const std::vector<int>& c, int a, int b) const {
    if (a == b) return 0;
    int v = c[static_cast<std::size_t>(X.edge_index(a, b))];
    return a < b ? v : M.E.inv(v);
  }
  std::size_t tri(const Triangle& t) const {
    return static_cast<std::size_t>(std::lower_bound(X.triangles().begin(), X.triangles().end(), t) -
                                    X.triangles().begin());
  }
  bool coherent(const std::vector<int>& c) const {
    const FiniteGroup& G = M.gamma;
    for (const auto& s : X.tetrahedra()) {
      int abc = c[ne + tri({s[0], s[1], s[2]})], acd = c[ne + tri({s[0], s[2], s[3]})];
      int bcd = c[ne + tri({s[1], s[2], s[3]})], abd = c[ne + tri({s[0], s[1], s[3]})];
      if (G.mul(abc, acd) != G.mul(M.act(h(c, s[0], s[1]), bcd), abd)) return false;
    }
    return true;
  }
};

}  // namespace

CrossedH1Report crossed_module_h1(const Nerve& X, const FiniteCrossedModule& M, std::size_t budget) {
  CrossedH1Report rep;
  rep.spec = M.name;
  rep.nerve = X.name();
  rep.budget = budget;
  CrossedEnumerator en{X, M, X.edges().size(), X.triangles().size(), {}};
  en.fibre.assign(static_cast<std::size_t>(M.E.order()), {});
  for (int g = 0; g < M.gamma.order(); ++g) en.fibre[static_cast<std::size_t>(M.mu[static_cast<std::size_t>(g)])].push_back(g);
  std::size_t max_fibre = 0;
  for (const auto& f : en.fibre) max_fibre = std::max(max_fibre, f.size());
  const std::size_t edge_states =
      checked_power(static_cast<std::size_t>(M.E.order()), en.ne, budget, "crossed cocycle enumeration");
  if (en.nt && max_fibre) {
    std::size_t per = checked_power(max_fibre, en.nt, budget, "crossed cocycle enumeration");
    if (edge_states > budget / per) fail("SpecTooLarge", "crossed cocycle enumeration exceeds budget " + std::to_string(budget));
  }

  std::vector<std::vector<int>> cocycles;
  std::vector<int> c(en.ne + en.nt, 0);
  for (std::size_t k = 0; k < edge_states; ++k) {
    auto edges = decode(k, en.ne, static_cast<std::size_t>(M.E.order()));
    std::copy(edges.begin(), edges.end(), c.begin());
    ++rep.states;
    std::vector<const std::vector<int>*> choices;
    bool possible = true;
    for (std::size_t t = 0; t < en.nt && possible; ++t) {
      const auto& tr = X.triangles()[t];
      int target = M.E.mul(M.E.mul(en.h(c, tr[0], tr[1]), en.h(c, tr[1], tr[2])), M.E.inv(en.h(c, tr[0], tr[2])));
      choices.push_back(&en.fibre[static_cast<std::size_t>(target)]);
      possible = !choices.back()->empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> pos(en.nt, 0);
    for (;;) {
      for (std::size_t t = 0; t < en.nt; ++t) c[en.ne + t] = (*choices[t])[pos[t]];
      ++rep.states;
      if (en.coherent(c)) cocycles.push_back(c);
      std::size_t t = en.nt;
      while (t > 0 && pos[t - 1] + 1 == choices[t - 1]->size()) pos[--t] = 0;
      if (t == 0) break;
      ++pos[t - 1];
    }
    if (rep.states > budget) fail("SpecTooLarge", "crossed cocycle enumeration exceeds budget " + std::to_string(budget));
  }
  std::sort(cocycles.begin(), cocycles.end());
  rep.cocycles = cocycles.size();

  std::vector<std::size_t> parent(cocycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto locate = [&](const std::vector<int>& v) {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), v);
    if (it == cocycles.end() || *it != v) fail("GaugeLeftCocycles", M.name, ErrorClass::Internal);
    return static_cast<std::size_t>(it - cocycles.begin());
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const FiniteGroup& G = M.gamma;
  const FiniteGroup& E = M.E;
  for (std::size_t idx = 0; idx < cocycles.size(); ++idx) {
    const auto& base = cocycles[idx];
    // Vertex gauge e at v: h_ij ↦ e_i h_ij e_j⁻¹, γ_ijk ↦ e_i.γ_ijk.
    for (std::size_t vi = 0; vi < X.vertices().size(); ++vi) {
      int v = X.vertices()[vi];
      for (int e = 1; e < E.order(); ++e) {
        auto n = base;
        for (std::size_t k = 0; k < en.ne; ++k) {
          const auto& [a, b] = X.edges()[k];
          if (a == v) n[k] = E.mul(e, n[k]);
          if (b == v) n[k] = E.mul(n[k], E.inv(e));
        }
        for (std::size_t t = 0; t < en.nt; ++t) {
          if (X.triangles()[t][0] == v) n[en.ne + t] = M.act(e, n[en.ne + t]);
        }
        unite(idx, locate(n));
      }
    }
    // Edge gauge η on (i,j): h_ij ↦ μ(η) h_ij and the adjacent triangle labels.
    for (std::size_t k = 0; k < en.ne; ++k) {
      const auto& [i, j] = X.edges()[k];
      for (int eta = 1; eta < G.order(); ++eta) {
        auto n = base;
        n[k] = E.mul(M.mu[static_cast<std::size_t>(eta)], n[k]);
        for (std::size_t t = 0; t < en.nt; ++t) {
          const auto& tr = X.triangles()[t];
          int& g = n[en.ne + t];
          if (tr[0] == i && tr[1] == j) {
            g = G.mul(eta, g);
          } else if (tr[1] == i && tr[2] == j) {
            g = G.mul(M.act(en.h(base, tr[0], tr[1]), eta), g);
          } else if (tr[0] == i && tr[2] == j) {
            g = G.mul(g, G.inv(eta));
          }
        }
        unite(idx, locate(n));
      }
    }
  }
  for (std::size_t i = 0; i < parent.size(); ++i) rep.classes += find(i) == i;
  return rep;
}

}  // namespace grext
