#include "grext/grpd/suites.hpp"

#include <array>

#include "grext/grpd/crossed_module.hpp"
#include "grext/grpd/groupoid.hpp"
#include "grext/grpd/sampling.hpp"
#include "grext/grpd/sequences.hpp"

namespace grext {

namespace {

constexpr std::array<const char*, 12> kChecks = {
    "aut_associativity",   "aut_identity",       "aut_inverse",         "psi_homomorphism",
    "psi_composition",     "psi_equivariance",   "phi0_composition",    "phi0_inverse",
    "psi_reconstruction",  "mu_homomorphism",    "mu_normality",        "mu_conjugation_formula",
};

// ᾱ⁻¹ through the extension matrix, independent of aut_inverse.
FieldVector inverse_apply(const AutRhoElement& a, const FieldVector& v) {
  return a.extension.inverse().apply(v);
}

unsigned sample_identities(const EmbeddedLattice& L, const std::vector<AutRhoElement>& letters,
                           std::mt19937_64& rng) {
  const SamplingRanges r;
  const std::size_t N = L.rank();
  auto p = random_aut_pair(rng, L, letters, r);
  auto q = random_aut_pair(rng, L, letters, r);
  auto s = random_aut_pair(rng, L, letters, r);
  auto g1 = random_gamma(rng, N, r);
  auto g2 = random_gamma(rng, N, r);
  auto x = random_point(rng, L, r);
  const auto one = aut_pair_identity(L);
  unsigned b = 0;

  if (!(aut_compose(aut_compose(p, q), s) == aut_compose(p, aut_compose(q, s)))) b |= 1u << 0;
  if (!(aut_compose(one, p) == p) || !(aut_compose(p, one) == p)) b |= 1u << 1;
  {
    auto pi = aut_inverse(p);
    AutGroupoidElement formula{aut_inverse(p.alpha), -inverse_apply(p.alpha, p.g)};
    if (!(aut_compose(p, pi) == one) || !(aut_compose(pi, p) == one) || !(pi == formula)) b |= 1u << 2;
  }
  GroupoidElement e1{g1, x};
  GroupoidElement e2{g2, target(L, e1)};
  if (!(psi_apply(p, psi_apply(q, e1)) == psi_apply(aut_compose(p, q), e1))) b |= 1u << 3;
  if (!(psi_apply(p, compose(L, e2, e1)) == compose(L, psi_apply(p, e2), psi_apply(p, e1)))) b |= 1u << 4;
  {
    auto im = psi_apply(p, e1);
    if (!(source(im) == phi0(p, source(e1))) || !(target(L, im) == phi0(p, target(L, e1)))) b |= 1u << 5;
  }
  if (!(aut_compose(p, q).alpha.T == p.alpha.T * q.alpha.T) ||
      !(phi0(aut_compose(p, q), x) == phi0(p, phi0(q, x)))) {
    b |= 1u << 6;
  }
  if (!(phi0(aut_inverse(p), phi0(p, x)) == x) || !(aut_inverse(p).alpha.T * p.alpha.T == IntegerMatrix::identity(N))) {
    b |= 1u << 7;
  }
  {
    // (α, φ₀) determines the automorphism: g = -φ₀(0).
    auto im = psi_apply(p, e1);
    FieldVector g = -phi0(p, zero_vector(L.field(), L.ambient_dim()));
    if (!(im.gamma == p.alpha.T.apply(g1)) || !(im.x == phi0(p, x)) || !(g == p.g)) b |= 1u << 8;
  }
  {
    std::vector<Integer> sum(N);
    for (std::size_t i = 0; i < N; ++i) sum[i] = g1[i] + g2[i];
    if (!(mu(L, sum) == aut_compose(mu(L, g1), mu(L, g2)))) b |= 1u << 9;
  }
  if (!check_mu_normality(L, p, g1).holds) b |= 1u << 10;
  {
    // μ(γ) = (1, -ρ(γ)) evaluated directly.
    AutGroupoidElement direct{aut_identity(L), -L.evaluate(g1)};
    if (!(mu(L, g1) == direct)) b |= 1u << 11;
  }
  return b;
}

std::vector<FiniteCrossedModule> finite_toys() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  int three = 0;
  for (int x = 0; x < s3.order(); ++x) {
    if (s3.element_order(x) == 3) {
      three = x;
      break;
    }
  }
  return {
      FiniteCrossedModule::to_trivial(FiniteGroup::cyclic(2)),
      FiniteCrossedModule::to_trivial(FiniteGroup::cyclic(3)),
      FiniteCrossedModule::reduction(4, 2),
      FiniteCrossedModule::normal_inclusion(s3, s3.subgroup_generated({three}), "A3"),
      FiniteCrossedModule::normal_inclusion(d4, d4.subgroup_generated({1}), "<r>"),
      FiniteCrossedModule::identity(s3),
      FiniteCrossedModule::identity(FiniteGroup::quaternion()),
  };
}

SuiteCheck from_crossed(const std::string& name, const CrossedModuleReport& r) {
  SuiteCheck c{name, r.checks, r.failures.size(), {}};
  if (!r.failures.empty()) c.first_failure = r.spec + ": " + r.failures.front();
  return c;
}

}  // namespace

SuiteReport run_grpd_suite(const EmbeddedLattice& L, const GroupDescriptor& aut, std::size_t samples,
                           std::uint64_t seed, bool parallel) {
  SuiteReport rep;
  rep.suite = "grpd";
  rep.seed = seed;
  const auto letters = with_inverses(aut.generators);
  std::vector<unsigned> mask(samples);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(s));
    mask[static_cast<std::size_t>(s)] = sample_identities(L, letters, rng);
  }
  for (std::size_t k = 0; k < kChecks.size(); ++k) {
    SuiteCheck c{kChecks[k], samples, 0, {}};
    for (std::size_t s = 0; s < samples; ++s) {
      if (mask[s] & (1u << k)) {
        if (!c.failures++) c.first_failure = "sample " + std::to_string(s);
      }
    }
    rep.checks.push_back(c);
  }
  // Separate streams so these do not reuse the samples above.
  rep.checks.push_back(from_crossed(
      "crossed_module_ad", crossed_module_verify_lattice(L, aut, LatticeCrossedKind::Ad, samples, seed ^ 0xad)));
  rep.checks.push_back(from_crossed("crossed_module_semidirect",
                                    crossed_module_verify_lattice(L, aut, LatticeCrossedKind::Semidirect,
                                                                  samples, seed ^ 0x5d)));
  SuiteCheck finite{"crossed_module_finite", 0, 0, {}};
  for (const auto& spec : finite_toys()) {
    auto r = crossed_module_verify(spec);
    finite.samples += r.checks;
    if (!r.ok()) {
      if (!finite.failures) finite.first_failure = r.spec + ": " + r.failures.front();
      finite.failures += r.failures.size();
    }
  }
  rep.checks.push_back(finite);
  return rep;
}

SuiteReport run_sequence_suite(const EmbeddedLattice& L, const GroupDescriptor& aut, std::size_t samples,
                               std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "sequences";
  rep.seed = seed;
  for (const auto& [alias, id] : sequence_ids()) {
    (void)alias;
    SuiteCheck c{id, 0, 0, {}};
    try {
      auto r = exact_sequence_verify(id, L, aut, samples, seed);
      for (const auto& a : r.arrows) {
        c.samples += a.checks;
        if (!a.ok) {
          if (!c.failures) c.first_failure = a.name + (a.detail.empty() ? "" : " (" + a.detail + ")");
          ++c.failures;
        }
      }
    } catch (const Error& e) {
      if (e.name() != "UnsupportedInstance") throw;
      c.first_failure = "inapplicable: " + e.witness();
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace grext
