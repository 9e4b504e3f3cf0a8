#include <map>

#include "doctest.h"
#include "grext/classify/classify.hpp"
#include "grext/classify/fpgroup.hpp"
#include "grext/classify/groupoid_nerve.hpp"
#include "grext/classify/homotopy.hpp"
#include "grext/classify/nerve.hpp"
#include "grext/densegroup/automorphism.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grext;

namespace {

FPGroup g2(std::vector<Word> relators) { return FPGroup{{"a", "b"}, std::move(relators)}; }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("preset nerves and their homology") {
    auto circle = nerve_preset("circle");
    auto sphere = nerve_preset("sphere");
    auto torus = nerve_preset("torus");
    CHECK(circle.euler_characteristic() == 0);
    CHECK(sphere.euler_characteristic() == 2);
    CHECK(torus.euler_characteristic() == 0);
    CHECK(torus.vertices().size() == 7);
    CHECK(torus.triangles().size() == 14);
    CHECK(simplicial_homology(circle, 1).name() == "Z");
    CHECK(simplicial_homology(sphere, 1).is_trivial());
    CHECK(simplicial_homology(sphere, 2).name() == "Z");
    CHECK(simplicial_homology(torus, 1).name() == "Z^2");
    CHECK(simplicial_homology(torus, 2).name() == "Z");
    CHECK(test::error_name([] { nerve_preset("klein"); }) == "UnknownPreset");
  }

  TEST_CASE("H² with Z_m coefficients against cochain enumeration") {
    auto sphere = nerve_preset("sphere");
    for (long m = 2; m <= 5; ++m) {
      auto h = simplicial_cohomology(sphere, 2, m);
      CHECK(h.order() == Integer(static_cast<long>(oracle::h2_order_cochains(sphere, m))));
      CHECK(h.name() == "Z_" + std::to_string(m));
    }
    CHECK(oracle::h2_order_cochains(nerve_preset("circle"), 3) == 1);
  }

  TEST_CASE("nerve validation") {
    CHECK(test::error_name([] { make_nerve("x", {0, 1, 2}, {{0, 1}, {1, 2}}, {{0, 1, 2}}, 0); }) ==
          "MissingEdgeOfTriangle");
    CHECK(test::error_name([] { make_nerve("x", {0, 1, 2, 3}, {{0, 1}, {2, 3}}, {}, 0); }) ==
          "DisconnectedSkeleton");
    CHECK(test::error_name([] { make_nerve("x", {0, 1}, {{0, 5}}, {}, 0); }) == "UnknownVertex");
    CHECK(test::error_name([] { make_nerve("x", {0, 1}, {{0, 1}}, {}, 7); }) == "BadBasepoint");
  }

  TEST_CASE("finitely presented groups") {
    // S3 = <a, b | a², b³, (ab)²>, Q8 = <a, b | a⁴, a²b⁻², b⁻¹aba>.
    CHECK(todd_coxeter_order(g2({{1, 1}, {2, 2, 2}, {1, 2, 1, 2}})) == 6u);
    CHECK(todd_coxeter_order(g2({{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}})) == 8u);
    CHECK(abelianization(g2({{1, 1}, {2, 2, 2}, {1, 2, 1, 2}})).name() == "Z_2");
    CHECK(abelianization(g2({{1, 2, -1, -2}})).name() == "Z^2");
    CHECK_FALSE(todd_coxeter_order(g2({{1, 2, -1, -2}}), 5000).has_value());
    CHECK(free_reduce({1, 2, -2, -1, 1}) == Word{1});
    CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
    auto torus = simplify(edge_path_group(nerve_preset("torus")).group).group;
    CHECK(torus.generators.size() == 2);
    CHECK(abelianization(torus).name() == "Z^2");
    CHECK(simplify(edge_path_group(nerve_preset("sphere")).group).group.generators.empty());
  }

  TEST_CASE("holonomy classification matches brute-force orbit enumeration") {
    for (const char* name : {"circle", "sphere"}) {
      auto X = nerve_preset(name);
      for (const auto& H : FiniteGroup::small_groups()) {
        auto ours = classify_finite(X, H);
        auto brute = oracle::cech_orbits(X, H, 2000000);
        REQUIRE(brute.has_value());
        CHECK_MESSAGE(ours.pointed == brute->pointed, name << " " << H.name());
        CHECK_MESSAGE(ours.free == brute->free, name << " " << H.name());
        auto b = oracle::cech_orbits_burnside(X, H);
        CHECK(b.pointed == brute->pointed);
        CHECK(b.free == brute->free);
      }
    }
    auto torus = nerve_preset("torus");
    for (const char* h : {"Z2", "Z3", "S3"}) {
      auto H = FiniteGroup::by_name(h);
      auto brute = oracle::cech_orbits(torus, H, 2000000);
      REQUIRE(brute.has_value());
      auto ours = classify_finite(torus, H);
      CHECK(ours.pointed == brute->pointed);
      CHECK(ours.free == brute->free);
    }
    for (const char* h : {"D4", "Z7"}) {
      auto H = FiniteGroup::by_name(h);
      auto b = oracle::cech_orbits_burnside(torus, H);
      auto ours = classify_finite(torus, H);
      CHECK(ours.pointed == b.pointed);
      CHECK(ours.free == b.free);
    }
    CHECK_FALSE(oracle::cech_orbits(torus, FiniteGroup::by_name("Z7"), 1000000).has_value());
    auto s3 = classify_finite(nerve_preset("circle"), FiniteGroup::by_name("S3"));
    CHECK(s3.pointed == 6);
    CHECK(s3.free == 3);
  }

  TEST_CASE("Hom enumeration: serial and parallel agree, budget enforced") {
    auto pi1 = simplify(edge_path_group(nerve_preset("torus")).group).group;
    for (const char* h : {"S3", "D4", "Q8", "S4"}) {
      auto H = FiniteGroup::by_name(h);
      CHECK(enumerate_homs_serial(pi1, H) == enumerate_homs_parallel(pi1, H));
    }
    CHECK(test::error_name([&] { enumerate_homs_parallel(pi1, FiniteGroup::by_name("S4"), 100); }) == "SpecTooLarge");
  }

  TEST_CASE("cocycles, coboundaries and holonomy") {
    auto X = nerve_preset("circle6");
    auto H = FiniteGroup::by_name("S3");
    auto G = std::make_shared<const CoefficientGroup>(CoefficientGroup::finite(H));
    std::vector<CoeffElement> labels(X.edges().size(), G->identity());
    labels.back() = G->from_index(3);
    auto c = make_cocycle(X, G, labels);
    CHECK(check_cocycle(c).ok);
    std::vector<CoeffElement> chain;
    for (std::size_t v = 0; v < X.vertices().size(); ++v) chain.push_back(G->from_index(static_cast<int>(v % 6)));
    auto d = apply_coboundary(c, chain);
    CHECK(check_cocycle(d).ok);
    CHECK(cohomologous(c, d, false));
    CHECK(cohomologous(c, trivial_cocycle(X, G), false) == false);
    auto hc = holonomy(c), hd = holonomy(d);
    REQUIRE(hc.images.size() == 1);
    CHECK(H.element_order(G->index(hc.images[0])) == H.element_order(G->index(hd.images[0])));

    auto S = nerve_preset("sphere");
    std::vector<CoeffElement> bad(S.edges().size(), G->identity());
    bad[0] = G->from_index(1);
    CHECK(test::error_name([&] { make_cocycle(S, G, bad); }) == "");
    CHECK_FALSE(check_cocycle(make_cocycle(S, G, bad)).ok);
    CHECK(test::error_name([&] { make_cocycle(S, G, {}); }) == "LabelsIncomplete");
  }

  TEST_CASE("crossed-module H¹ on the sphere") {
    auto S = nerve_preset("sphere");
    for (int m : {2, 3}) {
      auto r = crossed_module_h1(S, FiniteCrossedModule::to_trivial(FiniteGroup::cyclic(m)));
      CHECK(r.classes == static_cast<std::size_t>(m));
      CHECK(r.classes == oracle::h2_order_cochains(S, m));
    }
    CHECK(crossed_module_h1(S, FiniteCrossedModule::identity(FiniteGroup::by_name("S3"))).classes == 1);
    CHECK(test::error_name([&] {
            crossed_module_h1(nerve_preset("torus"), FiniteCrossedModule::identity(FiniteGroup::by_name("S3")), 1000);
          }) == "SpecTooLarge");
  }

  TEST_CASE("extension classification reports") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    auto circle = nerve_preset("circle");
    auto pointed = classify_extensions(aut, L.rank(), circle, ClassifyMode::PointedIso);
    CHECK(pointed.classes == "Z_2 x Z");
    CHECK_FALSE(pointed.count.has_value());
    auto sphere = classify_extensions(aut, L.rank(), nerve_preset("sphere"), ClassifyMode::Equivalence);
    CHECK(sphere.base == "trivial");
    CHECK(sphere.fiber == "Z^2");
    CHECK(test::error_name([] { parse_classify_mode("weak"); }) == "UnknownMode");
    auto cubic = test::preset_lattice("cubic");
    auto torus = classify_extensions(aut_rho(cubic), cubic.rank(), nerve_preset("torus"), ClassifyMode::PointedIso);
    REQUIRE(torus.count.has_value());
    CHECK(*torus.count == "4");
    CHECK(finite_quotient(aut, 3).order() == 6);
  }

  TEST_CASE("homotopy tables") {
    auto L = test::preset_lattice("lsqrt2");
    auto out = out_rho(L);
    auto t = homotopy_groups(out, L.rank(), lie_descriptor("R", 1), 5);
    CHECK(t.classifying == std::vector<std::string>{"Z_2 x Z", "Z^2", "0", "0", "0"});
    CHECK(t.groupoid == std::vector<std::string>{"Z^2", "0", "0", "0", "0"});
    CHECK(t.sequence_exact);
    auto su2 = homotopy_groups(out, L.rank(), lie_descriptor("SU2", 1), 5);
    CHECK(su2.groupoid[2] == "Z");
    CHECK(su2.classifying[3] == "Z");
    auto p = postnikov_report(out, L.rank(), lie_descriptor("R", 1), center_is_discrete(L));
    CHECK(p.summary == "X = X_(2): fiber K(Z^2,2) over K(Z_2 x Z,1)");
    CHECK(test::error_name([] { lie_descriptor("E8", 1); }) == "UnknownGDescriptor");
    CHECK(test::error_name([&] { homotopy_groups(out, L.rank(), lie_descriptor("SU2", 1), 40); }) ==
          "UnsupportedDegree");
  }

  TEST_CASE("finite groupoid nerves") {
    for (const char* name : {"Z2", "Z3", "S3", "Q8"}) {
      auto G = FiniteGroup::by_name(name);
      auto r = groupoid_nerve(FiniteAction::point(G));
      REQUIRE(r.components.size() == 1);
      const auto& c = r.components[0];
      CHECK(c.order == static_cast<std::size_t>(G.order()));
      CHECK(c.abelian_match);
      CHECK(c.isomorphism_certified);
      CHECK(r.simplices[1] == static_cast<std::size_t>(G.order()));
      auto reg = groupoid_nerve(FiniteAction::regular(G));
      REQUIRE(reg.components.size() == 1);
      CHECK(reg.components[0].order == 1u);
    }
    FiniteAction broken = FiniteAction::regular(FiniteGroup::by_name("Z3"));
    std::swap(broken.action[1][0], broken.action[1][1]);
    CHECK(test::error_name([&] { validate_action(broken); }) == "NotAnAction");
  }
}
