#include "grext/grpd/crossed_module.hpp"

#include <algorithm>

#include "grext/grpd/groupoid.hpp"
#include "grext/grpd/sampling.hpp"

namespace grext {

FiniteCrossedModule FiniteCrossedModule::to_trivial(const FiniteGroup& g) {
  FiniteCrossedModule c;
  c.name = g.name() + " -> 1";
  c.gamma = g;
  c.E = FiniteGroup::trivial();
  c.mu.assign(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> id(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) id[static_cast<std::size_t>(x)] = x;
  c.action = {id};
  return c;
}

FiniteCrossedModule FiniteCrossedModule::reduction(int m, int k) {
  if (k < 1 || m % k != 0) fail("BadReduction", std::to_string(k) + " does not divide " + std::to_string(m));
  FiniteCrossedModule c;
  c.gamma = FiniteGroup::cyclic(m);
  c.E = FiniteGroup::cyclic(k);
  c.name = c.gamma.name() + " -> " + c.E.name();
  for (int x = 0; x < m; ++x) c.mu.push_back(x % k);
  std::vector<int> id(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) id[static_cast<std::size_t>(x)] = x;
  c.action.assign(static_cast<std::size_t>(k), id);
  return c;
}

FiniteCrossedModule FiniteCrossedModule::normal_inclusion(const FiniteGroup& A, const std::vector<int>& sub,
                                                          const std::string& sub_name) {
  std::vector<int> h = sub;
  std::sort(h.begin(), h.end());
  if (h.empty() || h[0] != 0) fail("NotASubgroup", sub_name + " lacks the identity");
  if (!A.is_normal(h)) fail("NotNormal", sub_name + " in " + A.name());
  const std::size_t n = h.size();
  auto index = [&](int a) {
    auto it = std::lower_bound(h.begin(), h.end(), a);
    if (it == h.end() || *it != a) fail("NotASubgroup", sub_name + " not closed");
    return static_cast<int>(it - h.begin());
  };
  std::vector<int> t(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(A.element_name(h[i]));
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = index(A.mul(h[i], h[j]));
  }
  FiniteCrossedModule c;
  c.gamma = FiniteGroup::from_table(sub_name, n, std::move(t), std::move(names));
  c.E = A;
  c.name = sub_name + " -> " + A.name();
  for (std::size_t i = 0; i < n; ++i) c.mu.push_back(h[i]);
  for (int e = 0; e < A.order(); ++e) {
    std::vector<int> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = index(A.conj(e, h[i]));
    c.action.push_back(row);
  }
  return c;
}

FiniteCrossedModule FiniteCrossedModule::identity(const FiniteGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) all[static_cast<std::size_t>(x)] = x;
  FiniteCrossedModule c = normal_inclusion(g, all, g.name());
  c.name = g.name() + " -> " + g.name() + " (id)";
  return c;
}

namespace {

void note_failure(CrossedModuleReport& r, const std::string& what) {
  if (r.failures.size() < 8) r.failures.push_back(what);
}

}  // namespace

CrossedModuleReport crossed_module_verify(const FiniteCrossedModule& c) {
  CrossedModuleReport r;
  r.spec = c.name;
  const FiniteGroup& G = c.gamma;
  const FiniteGroup& E = c.E;
  const int ng = G.order(), ne = E.order();
  if (static_cast<int>(c.mu.size()) != ng || static_cast<int>(c.action.size()) != ne) {
    fail("MalformedSpec", c.name);
  }
  auto s = [](int v) { return std::to_string(v); };
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < ng; ++b) {
      ++r.checks;
      if (c.mu[static_cast<std::size_t>(G.mul(a, b))] !=
          E.mul(c.mu[static_cast<std::size_t>(a)], c.mu[static_cast<std::size_t>(b)])) {
        r.mu_homomorphism = false;
        note_failure(r, "mu(" + s(a) + "*" + s(b) + ")");
      }
      ++r.checks;
      if (c.act(c.mu[static_cast<std::size_t>(a)], b) != G.conj(a, b)) {
        r.peiffer = false;
        note_failure(r, "peiffer(" + s(a) + "," + s(b) + ")");
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    for (int a = 0; a < ng; ++a) {
      ++r.checks;
      if (c.mu[static_cast<std::size_t>(c.act(e, a))] != E.conj(e, c.mu[static_cast<std::size_t>(a)])) {
        r.equivariance = false;
        note_failure(r, "equivariance(" + s(e) + "," + s(a) + ")");
      }
      for (int b = 0; b < ng; ++b) {
        ++r.checks;
        if (c.act(e, G.mul(a, b)) != G.mul(c.act(e, a), c.act(e, b))) {
          r.action_by_automorphisms = false;
          note_failure(r, "automorphism(" + s(e) + "," + s(a) + "," + s(b) + ")");
        }
      }
      for (int f = 0; f < ne; ++f) {
        ++r.checks;
        if (c.act(E.mul(e, f), a) != c.act(e, c.act(f, a))) {
          r.action_homomorphism = false;
          note_failure(r, "action(" + s(e) + "," + s(f) + "," + s(a) + ")");
        }
      }
    }
  }
  int ker = 0;
  std::vector<bool> hit(static_cast<std::size_t>(ne));
  for (int a = 0; a < ng; ++a) {
    if (c.mu[static_cast<std::size_t>(a)] == 0) ++ker;
    hit[static_cast<std::size_t>(c.mu[static_cast<std::size_t>(a)])] = true;
  }
  int img = static_cast<int>(std::count(hit.begin(), hit.end(), true));
  r.kernel = "order " + s(ker);
  r.image = "order " + s(img);
  r.cokernel = "order " + s(ne / img);
  return r;
}

AbelianInvariants rho_kernel(const EmbeddedLattice& L) {
  std::vector<std::vector<Rational>> cols;
  std::vector<Rational> all;
  for (const auto& v : L.basis()) {
    cols.push_back(L.flatten(v));
    all.insert(all.end(), cols.back().begin(), cols.back().end());
  }
  Integer den = common_denominator(all);
  IntegerMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = Rational(cols[j][i] * den).get_num();
  }
  // ker ρ ≅ Z^(N - rank).
  AbelianInvariants k;
  k.free_rank = L.rank() - smith_normal_form(m).rank();
  return k;
}

CrossedModuleReport crossed_module_verify_lattice(const EmbeddedLattice& L, const GroupDescriptor& aut,
                                                  LatticeCrossedKind kind, std::size_t samples,
                                                  std::uint64_t seed) {
  CrossedModuleReport r;
  const auto letters = with_inverses(aut.generators);
  const SamplingRanges ranges;
  const std::size_t N = L.rank();
  auto add = [](std::vector<Integer> a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  // Results per sample so the report does not depend on scheduling.
  std::vector<unsigned char> bits(samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(s));
    auto g1 = random_gamma(rng, N, ranges);
    auto g2 = random_gamma(rng, N, ranges);
    unsigned char b = 0;
    if (kind == LatticeCrossedKind::Ad) {
      AutRhoElement e = random_aut(rng, L, letters, ranges);
      AutRhoElement f = random_aut(rng, L, letters, ranges);
      AutRhoElement id = aut_identity(L);
      auto ad = [&](const std::vector<Integer>&) { return id; };
      auto act = [](const AutRhoElement& a, const std::vector<Integer>& g) { return a.T.apply(g); };
      if (!(ad(add(g1, g2)) == aut_compose(ad(g1), ad(g2)))) b |= 1;
      if (!(act(aut_compose(e, f), g1) == act(e, act(f, g1)))) b |= 2;
      if (!(act(e, add(g1, g2)) == add(act(e, g1), act(e, g2)))) b |= 4;
      if (!(ad(act(e, g1)) == aut_compose(aut_compose(e, ad(g1)), aut_inverse(e)))) b |= 8;
      // γ1 + γ2 - γ1 = γ2 in abelian Γ.
      if (!(act(ad(g1), g2) == g2)) b |= 16;
    } else {
      AutGroupoidElement e = random_aut_pair(rng, L, letters, ranges);
      AutGroupoidElement f = random_aut_pair(rng, L, letters, ranges);
      auto act = [](const AutGroupoidElement& a, const std::vector<Integer>& g) { return a.alpha.T.apply(g); };
      if (!(mu(L, add(g1, g2)) == aut_compose(mu(L, g1), mu(L, g2)))) b |= 1;
      if (!(act(aut_compose(e, f), g1) == act(e, act(f, g1)))) b |= 2;
      if (!(act(e, add(g1, g2)) == add(act(e, g1), act(e, g2)))) b |= 4;
      if (!check_mu_normality(L, e, g1).holds) b |= 8;
      if (!(act(mu(L, g1), g2) == g2)) b |= 16;
    }
    bits[static_cast<std::size_t>(s)] = b;
  }
  r.checks = samples * 5;
  for (std::size_t s = 0; s < samples; ++s) {
    unsigned char b = bits[s];
    if (!b) continue;
    if (b & 1) r.mu_homomorphism = false;
    if (b & 2) r.action_homomorphism = false;
    if (b & 4) r.action_by_automorphisms = false;
    if (b & 8) r.equivariance = false;
    if (b & 16) r.peiffer = false;
    note_failure(r, "sample " + std::to_string(s) + " mask " + std::to_string(b));
  }
  AbelianInvariants zN{{}, N};
  if (kind == LatticeCrossedKind::Ad) {
    r.spec = "Γ -> Aut(ρ), γ ↦ ad(γ)";
    r.kernel = zN.name();
    r.image = "trivial";
    r.cokernel = aut.name;
  } else {
    r.spec = "Γ -> Aut(ρ)⋉G, γ ↦ μ(γ)";
    r.kernel = rho_kernel(L).name();
    r.image = "μ(Γ) ≅ " + zN.name();
    r.cokernel = "Out(Γ⋉G) (symbolic)";
    if (N > L.ambient_dim()) r.flags.push_back("μ(Γ) not closed: quotient is not a Lie group");
  }
  if (!aut.complete) r.flags.push_back("E built from a verified subgroup of Aut(ρ)");
  return r;
}

}  // namespace grext
