#include "doctest.h"
#include "grext/densegroup/automorphism.hpp"
#include "grext/grpd/crossed_module.hpp"
#include "grext/grpd/ga.hpp"
#include "grext/grpd/groupoid.hpp"
#include "grext/grpd/sampling.hpp"
#include "grext/grpd/sequences.hpp"
#include "grext/grpd/suites.hpp"
#include "support.hpp"

using namespace grext;

namespace {

std::vector<int> elements_of_order_dividing(const FiniteGroup& G, int k) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g)
    if (k % G.element_order(g) == 0) out.push_back(g);
  return out;
}

}  // namespace

TEST_SUITE("grpd") {
  TEST_CASE("identity suites pass and do not depend on threading") {
    for (const char* name : {"lsqrt2", "cubic"}) {
      auto L = test::preset_lattice(name);
      auto aut = aut_rho(L);
      auto par = run_grpd_suite(L, aut, 1500, 7, true);
      auto ser = run_grpd_suite(L, aut, 1500, 7, false);
      CHECK(par.ok());
      REQUIRE(par.checks.size() == ser.checks.size());
      for (std::size_t i = 0; i < par.checks.size(); ++i) {
        CHECK(par.checks[i].name == ser.checks[i].name);
        CHECK(par.checks[i].samples == ser.checks[i].samples);
        CHECK(par.checks[i].failures == 0);
      }
      CHECK(run_sequence_suite(L, aut, 500, 7).ok());
    }
  }

  TEST_CASE("groupoid composition") {
    auto L = test::preset_lattice("lsqrt2");
    const auto& f = L.field();
    auto r = sample_rng(1, 0);
    SamplingRanges ranges;
    for (int s = 0; s < 200; ++s) {
      GroupoidElement e1{random_gamma(r, 2, ranges), random_point(r, L, ranges)};
      GroupoidElement e2{random_gamma(r, 2, ranges), target(L, e1)};
      auto c = compose(L, e2, e1);
      CHECK(source(c) == source(e1));
      CHECK(target(L, c) == target(L, e2));
      auto u = compose(L, groupoid_inverse(L, e1), e1);
      CHECK(u == groupoid_unit(L, source(e1)));
    }
    GroupoidElement a{{Integer(1), Integer(0)}, FieldVector{FieldElement::zero(f)}};
    GroupoidElement b{{Integer(0), Integer(1)}, FieldVector{FieldElement::zero(f)}};
    CHECK(test::error_name([&] { compose(L, b, a); }) == "NotComposable");
    CHECK(target(L, a)[0] == FieldElement::one(f));
  }

  TEST_CASE("μ lands in a normal subgroup") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    auto letters = with_inverses(aut.generators);
    SamplingRanges ranges;
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto r = sample_rng(9, s);
      auto p = random_aut_pair(r, L, letters, ranges);
      auto g = random_gamma(r, 2, ranges);
      CHECK(check_mu_normality(L, p, g).holds);
    }
  }

  TEST_CASE("finite crossed modules") {
    auto S3 = FiniteGroup::by_name("S3");
    for (const auto& M : {FiniteCrossedModule::to_trivial(FiniteGroup::cyclic(2)),
                          FiniteCrossedModule::reduction(4, 2), FiniteCrossedModule::identity(S3),
                          FiniteCrossedModule::normal_inclusion(S3, elements_of_order_dividing(S3, 3), "A3"),
                          FiniteCrossedModule::identity(FiniteGroup::quaternion())}) {
      CHECK_MESSAGE(crossed_module_verify(M).ok(), M.name);
    }
    auto id = crossed_module_verify(FiniteCrossedModule::identity(S3));
    CHECK(id.kernel == "order 1");
    CHECK(id.cokernel == "order 1");
    CHECK(test::error_name([&] {
            FiniteCrossedModule::normal_inclusion(S3, elements_of_order_dividing(S3, 2), "bad");
          }) == "NotASubgroup");
    auto transposition = elements_of_order_dividing(S3, 2);
    std::vector<int> sub{transposition[0], transposition[1]};
    CHECK(test::error_name([&] { FiniteCrossedModule::normal_inclusion(S3, sub, "<t>"); }) == "NotNormal");
    CHECK(test::error_name([] { FiniteCrossedModule::reduction(4, 3); }) == "BadReduction");
  }

  TEST_CASE("injected faults are reported") {
    auto S3 = FiniteGroup::by_name("S3");
    auto M = FiniteCrossedModule::identity(S3);
    for (auto& row : M.action)
      for (std::size_t g = 0; g < row.size(); ++g) row[g] = static_cast<int>(g);
    auto r = crossed_module_verify(M);
    CHECK_FALSE(r.peiffer);
    CHECK_FALSE(r.equivariance);
    CHECK_FALSE(r.failures.empty());

    auto N = FiniteCrossedModule::reduction(4, 2);
    N.mu[1] = 0;
    N.mu[2] = 1;
    CHECK_FALSE(crossed_module_verify(N).mu_homomorphism);
  }

  TEST_CASE("lattice crossed modules") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    CHECK(crossed_module_verify_lattice(L, aut, LatticeCrossedKind::Ad, 300, 3).ok());
    CHECK(crossed_module_verify_lattice(L, aut, LatticeCrossedKind::Semidirect, 300, 3).ok());
    CHECK(rho_kernel(L).is_trivial());
  }

  TEST_CASE("quotient lemma on toys") {
    auto D4 = FiniteGroup::dihedral(4);
    auto S3 = FiniteGroup::by_name("S3");
    CHECK(quotient_lemma_check(S3, elements_of_order_dividing(S3, 3), {S3.identity()}, "S3").exact());
    auto Z8 = FiniteGroup::cyclic(8);
    CHECK(quotient_lemma_check(Z8, {0, 2, 4, 6}, {0, 4}, "Z8").exact());
    int r = 0;
    while (D4.element_order(r) != 4) ++r;
    std::vector<int> rot;
    for (int k = 0; k < 4; ++k) rot.push_back(D4.power(r, k));
    CHECK(quotient_lemma_check(D4, rot, {rot[0], rot[2]}, "D4").exact());
    CHECK_FALSE(quotient_lemma_check(S3, elements_of_order_dividing(S3, 3), {0, 1}, "bad").exact());
  }

  TEST_CASE("exact sequences on the Z[sqrt2] lattice") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    for (const char* id : {"inner-outer", "center-inner", "mu-outer", "quotient-lemma"}) {
      CHECK_MESSAGE(exact_sequence_verify(id, L, aut, 200, 7).exact(), id);
    }
    CHECK(canonical_sequence_id("II.1.5a") == "inner-outer");
    CHECK(test::error_name([] { canonical_sequence_id("nope"); }) == "UnknownSequence");
    CHECK(test::error_name([&] { exact_sequence_verify("discrete-center", L, aut, 10, 7); }) ==
          "UnsupportedInstance");
    CHECK(exact_sequence_verify("inner-outer", L, aut, 50, 7).conclusion ==
          "Int(ρ) = trivial, Aut(ρ) = Out(ρ) = Z_2 x Z");
  }

  TEST_CASE("affine group") {
    auto L = test::preset_lattice("lsqrt2");
    const auto& f = L.field();
    auto t = FieldElement::generator(f);
    auto h1 = GAElement::make(t, FieldElement::one(f));
    auto h2 = GAElement::make(FieldElement::from_rational(f, 3), t);
    auto c = ga_compose(h2, h1);
    CHECK(c.a == FieldElement::from_rational(f, 3) * t);
    CHECK(c.b == FieldElement::from_rational(f, 3) + t);
    CHECK(ga_compose(ga_inverse(c), c) == GAElement::identity(f));
    CHECK(test::error_name([&] { GAElement::make(-t, t); }) == "NotOrientationPreserving");
  }
}
