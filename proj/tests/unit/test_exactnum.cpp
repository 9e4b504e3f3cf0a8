#include <random>

#include "doctest.h"
#include "grext/exactnum/integer_matrix.hpp"
#include "grext/exactnum/number_field.hpp"
#include "grext/exactnum/pell.hpp"
#include "grext/exactnum/polynomial.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grext;

namespace {

// Sign changes of p over a fine rational grid; counts simple roots when the
// grid separates them.
int grid_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi, int steps) {
  int changes = 0, prev = p.sign_at(lo);
  for (int k = 1; k <= steps; ++k) {
    Rational x = lo + (hi - lo) * Rational(k, steps);
    int s = p.sign_at(x);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

Integer gcd_of_minors(const IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  const std::size_t r = m.rows(), c = m.cols();
  for (unsigned rs = 0; rs < (1u << r); ++rs) {
    if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
    for (unsigned cs = 0; cs < (1u << c); ++cs) {
      if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
      IntegerMatrix sub(k, k);
      std::size_t i = 0;
      for (std::size_t a = 0; a < r; ++a) {
        if (!(rs >> a & 1)) continue;
        std::size_t j = 0;
        for (std::size_t b = 0; b < c; ++b) {
          if (cs >> b & 1) sub(i, j++) = m(a, b);
        }
        ++i;
      }
      g = gcd(g, sub.determinant());
    }
  }
  return g;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("Sturm counts agree with a sign-change scan") {
    auto p = Polynomial::from_integers({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    CHECK(count_roots_open(p, Rational(0), Rational(4)) == 3);
    CHECK(count_roots_open(p, Rational(3, 2), Rational(5, 2)) == 1);
    auto q = Polynomial::from_integers({-1, -1, 0, 1});  // x^3 - x - 1
    CHECK(count_roots_open(q, Rational(-3), Rational(3)) == grid_sign_changes(q, Rational(-3), Rational(3), 600));
    auto r = Polynomial::from_integers({1, 0, -10, 0, 1});  // four real roots
    CHECK(count_roots_open(r, Rational(-4), Rational(4)) == 4);
    CHECK(grid_sign_changes(r, Rational(-4), Rational(4), 800) == 4);
  }

  TEST_CASE("isolating interval brackets the declared root") {
    auto f = NumberField::make({-2, 0, 1}, Rational(1), Rational(2));
    const auto& iso = f.isolating_interval();
    CHECK(f.min_poly().sign_at(iso.lo) * f.min_poly().sign_at(iso.hi) < 0);
    CHECK(iso.hi - iso.lo < Rational(1, 1) / Rational(Integer(1) << 64));
    CHECK(FieldElement::generator(f).approx() == doctest::Approx(1.41421356237).epsilon(1e-10));
    auto cubic = NumberField::make({-1, -1, 0, 1}, Rational(1), Rational(2));
    CHECK(FieldElement::generator(cubic).approx() == doctest::Approx(1.32471795724).epsilon(1e-10));
  }

  TEST_CASE("field construction errors") {
    CHECK(test::error_name([] { NumberField::make({-2, 0, 2}, Rational(1), Rational(2)); }) == "NotMonic");
    CHECK(test::error_name([] { NumberField::make({1, -2, 1}, Rational(0), Rational(2)); }) == "NotSquarefree");
    CHECK(test::error_name([] { NumberField::make({-2, 0, 1}, Rational(2), Rational(3)); }) == "NoRootInInterval");
    CHECK(test::error_name([] { NumberField::make({-2, 0, 1}, Rational(-2), Rational(2)); }) ==
          "MultipleRootsInInterval");
  }

  TEST_CASE("field axioms on seeded samples") {
    std::mt19937_64 rng(11);
    for (auto f : {NumberField::make({-2, 0, 1}, Rational(1), Rational(2)),
                   NumberField::make({-1, -1, 0, 1}, Rational(1), Rational(2))}) {
      int failures = 0;
      for (int s = 0; s < 5000; ++s) {
        auto a = test::random_element(rng, f), b = test::random_element(rng, f), c = test::random_element(rng, f);
        failures += (a * b) * c != a * (b * c);
        failures += a * (b + c) != a * b + a * c;
        failures += a * b != b * a;
        if (!a.is_zero()) failures += a * a.inverse() != FieldElement::one(f);
        if (!b.is_zero()) failures += (a / b) * b != a;
        failures += sign_of(a) != (a.approx() > 0 ? 1 : a.approx() < 0 ? -1 : 0);
      }
      CHECK(failures == 0);
    }
  }

  TEST_CASE("minimal polynomials and ordering") {
    auto f = NumberField::make({-2, 0, 1}, Rational(1), Rational(2));
    auto t = FieldElement::generator(f);
    CHECK(minimal_polynomial(FieldElement::one(f) + t) == std::vector<Integer>{-1, -2, 1});
    CHECK(minimal_polynomial(FieldElement::from_rational(f, 3)) == std::vector<Integer>{-3, 1});
    CHECK(compare(t, FieldElement::from_rational(f, Rational(141, 100))) > 0);
    CHECK(compare(t, FieldElement::from_rational(f, Rational(142, 100))) < 0);
    CHECK((FieldElement::one(f) + t).pretty() == "1+θ");
  }

  TEST_CASE("Pell solutions match brute force") {
    for (long D = 2; D <= 60; ++D) {
      if (is_perfect_square(Integer(D))) {
        CHECK(test::error_name([&] { pell_fundamental_unit(Integer(D)); }) == "PerfectSquare");
        continue;
      }
      auto s = pell_fundamental_unit(Integer(D));
      CHECK(s.x * s.x - D * s.y * s.y == s.norm);
      auto b = oracle::pell_bruteforce(D, 1000);
      if (b) {
        CHECK(s.x == b->x);
        CHECK(s.y == b->y);
        CHECK(s.norm == b->norm);
      } else {
        CHECK(s.y > 1000);
      }
    }
    auto two = pell_fundamental_unit(2);
    CHECK(two.x == 1);
    CHECK(two.y == 1);
    CHECK(two.norm == -1);
  }

  TEST_CASE("Hermite form reconstructs and is canonical") {
    std::mt19937_64 rng(3);
    for (int s = 0; s < 200; ++s) {
      auto m = random_matrix(rng, 1 + s % 4, 1 + (s / 4) % 4, 9);
      auto h = hermite_normal_form(m);
      CHECK(h.U * m == h.H);
      CHECK(h.U.is_unimodular());
      long prev = -1;
      for (std::size_t r = 0; r < h.pivot_columns.size(); ++r) {
        auto pc = h.pivot_columns[r];
        CHECK(static_cast<long>(pc) > prev);
        prev = static_cast<long>(pc);
        CHECK(h.H(r, pc) > 0);
        for (std::size_t above = 0; above < r; ++above) {
          CHECK(h.H(above, pc) >= 0);
          CHECK(h.H(above, pc) < h.H(r, pc));
        }
      }
    }
  }

  TEST_CASE("Smith form agrees with determinantal divisors") {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 150; ++s) {
      auto m = random_matrix(rng, 2 + s % 2, 2 + (s / 2) % 2, 12);
      auto sm = smith_normal_form(m);
      CHECK(sm.U * m * sm.V == sm.D);
      CHECK(sm.U.is_unimodular());
      CHECK(sm.V.is_unimodular());
      auto inv = sm.invariant_factors();
      for (std::size_t k = 1; k < inv.size(); ++k) CHECK(inv[k] % inv[k - 1] == 0);
      Integer prod = 1;
      for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer dk = gcd_of_minors(m, k);
        if (dk == 0) {
          CHECK(inv.size() < k);
          break;
        }
        REQUIRE(inv.size() >= k);
        prod *= inv[k - 1];
        CHECK(prod == dk);
      }
    }
  }

  TEST_CASE("abelian invariants") {
    auto a = AbelianInvariants::from_cyclic_orders({Integer(2), Integer(0)});
    CHECK(a.name() == "Z_2 x Z");
    CHECK(AbelianInvariants::from_cyclic_orders({Integer(4), Integer(6)}).name() == "Z_2 x Z_12");
    CHECK(abelian_hom(AbelianInvariants::from_cyclic_orders({Integer(0), Integer(0)}), a).name() == "Z_2 x Z_2 x Z^2");
  }

  TEST_CASE("rational parsing") {
    CHECK(*parse_rational("-3/6") == Rational(-1, 2));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("x"));
    CHECK(to_short_string(make_rational(4, 2)) == "2");
    CHECK(to_short_string(Rational(-1, 3)) == "-1/3");
  }
}
