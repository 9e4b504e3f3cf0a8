#include <algorithm>
#include <set>

#include "doctest.h"
#include "grext/densegroup/automorphism.hpp"
#include "grext/densegroup/carriere.hpp"
#include "grext/densegroup/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grext;

namespace {

std::vector<std::array<long, 4>> as_rows(const std::vector<SmallMatrix>& v) {
  std::vector<std::array<long, 4>> out;
  for (const auto& T : v) out.push_back({static_cast<long>(T[0]), static_cast<long>(T[1]), static_cast<long>(T[2]),
                                         static_cast<long>(T[3])});
  std::sort(out.begin(), out.end());
  return out;
}

std::array<long, 4> mul(const std::array<long, 4>& a, const std::array<long, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_SUITE("densegroup") {
  TEST_CASE("Z[sqrt2] automorphisms") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    CHECK(aut.name == "Z_2 x Z");
    CHECK(aut.complete);
    REQUIRE(aut.generators.size() == 2);
    CHECK(aut.generators[0].scalar().pretty() == "-1");
    CHECK(aut.generators[1].scalar().pretty() == "1+θ");
    CHECK(aut.generators[1].T == IntegerMatrix{{1, 2}, {1, 1}});
    for (const auto& g : aut.generators) {
      CHECK(check_equivariance(L, g));
      CHECK(malcev_lift(L, g) == g.T);
    }
  }

  TEST_CASE("bounded search equals the brute-force oracle") {
    for (const char* name : {"lsqrt2", "cubic"}) {
      auto L = test::preset_lattice(name);
      auto oracle_set = oracle::rank2_automorphisms(L, 4);
      std::sort(oracle_set.begin(), oracle_set.end());
      CHECK(as_rows(bounded_aut_search_serial(L, 4)) == oracle_set);
      CHECK(as_rows(bounded_aut_search_parallel(L, 4)) == oracle_set);
    }
  }

  TEST_CASE("bounded matrices are signed powers of the unit") {
    auto found = oracle::rank2_automorphisms(test::preset_lattice("lsqrt2"), 10);
    std::set<std::array<long, 4>> powers;
    std::array<long, 4> u{1, 2, 1, 1}, uinv{-1, 2, 1, -1}, p{1, 0, 0, 1}, q{1, 0, 0, 1};
    for (int k = 0; k < 6; ++k) {
      for (const auto& m : {p, q}) {
        powers.insert(m);
        powers.insert({-m[0], -m[1], -m[2], -m[3]});
      }
      p = mul(p, u);
      q = mul(q, uinv);
    }
    for (const auto& T : found) CHECK(powers.count(T) == 1);
    CHECK(std::count(found.begin(), found.end(), std::array<long, 4>{1, 2, 1, 1}) == 1);
  }

  TEST_CASE("cubic lattice has only ±1") {
    auto L = test::preset_lattice("cubic");
    CHECK(aut_rho(L).name == "Z_2");
    auto found = oracle::rank2_automorphisms(L, 10);
    std::sort(found.begin(), found.end());
    CHECK(found == std::vector<std::array<long, 4>>{{-1, 0, 0, -1}, {1, 0, 0, 1}});
  }

  TEST_CASE("multiplier ring and unit group") {
    auto L = test::preset_lattice("lsqrt2");
    auto O = multiplier_ring(L);
    CHECK(O.rank() == 2);
    auto t = FieldElement::generator(L.field());
    CHECK(order_contains(O, t));
    CHECK(!order_contains(O, FieldElement::from_rational(L.field(), Rational(1, 2))));
    CHECK(unit_group(O, L).name == "Z_2 x Z");
  }

  TEST_CASE("automorphism group law") {
    auto L = test::preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    const auto& u = aut.generators[1];
    CHECK(aut_compose(u, aut_inverse(u)) == aut_identity(L));
    CHECK(aut_power(u, 3) == aut_compose(u, aut_compose(u, u)));
    CHECK(aut_power(u, -2) == aut_inverse(aut_compose(u, u)));
    CHECK(test::error_name([&] {
            is_automorphism(L, FieldElement::from_rational(L.field(), Rational(2)));
          }) == "NotSurjective");
    CHECK(test::error_name([&] {
            is_automorphism(L, FieldElement::from_rational(L.field(), Rational(1, 2)));
          }) == "NotLatticePreserving");
  }

  TEST_CASE("Out(ρ) for an abelian lattice") {
    auto out = out_rho(test::preset_lattice("lsqrt2"));
    CHECK(out.out.name == "Z_2 x Z");
    CHECK(out.inner.name == "trivial");
    CHECK(out.center.name == "Z^2");
  }

  TEST_CASE("planar lattice search is flagged incomplete") {
    auto L = test::preset_lattice("complex-alpha-sqrt2");
    SearchOptions opt;
    opt.bound = 2;
    auto aut = aut_rho(L, opt);
    CHECK_FALSE(aut.complete);
    CHECK_FALSE(L.density_checked());
    for (const auto& g : aut.generators) CHECK(check_equivariance(L, g));
  }

  TEST_CASE("Carrière family in GA") {
    auto r = carriere_family({2, 1, 1, 1});
    const auto& f = r.field;
    auto half = [&](long a, long b) {
      return FieldElement(f, std::vector<Rational>{Rational(a, 2), Rational(b, 2)});
    };
    CHECK(r.lambda1 == half(3, -1));
    CHECK(r.lambda2 == half(3, 1));
    CHECK(r.lambda1 * r.lambda2 == FieldElement::one(f));
    for (auto [lam, V] : {std::pair{r.lambda1, r.V1}, std::pair{r.lambda2, r.V2}}) {
      auto c = [&](long x) { return FieldElement::from_rational(f, Rational(x)); };
      CHECK(c(2) * V[0] + c(1) * V[1] == lam * V[0]);
      CHECK(c(1) * V[0] + c(1) * V[1] == lam * V[1]);
    }
    CHECK(r.conjugation_verified);
    auto w = ga_word_eval(r, "A V1 A^-1");
    CHECK(w.a == FieldElement::one(f));
    CHECK(w.b == r.lambda1 * r.ga_V1.b);
    CHECK(test::error_name([] { carriere_family({2, 1, 1, 2}); }) == "NotSL2");
    CHECK(test::error_name([] { carriere_family({1, 1, 0, 1}); }) == "TraceTooSmall");
    CHECK(test::error_name([&] { ga_word_eval(r, "A B"); }) == "BadWord");
  }
}
