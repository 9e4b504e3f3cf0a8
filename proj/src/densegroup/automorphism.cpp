#include "grext/densegroup/automorphism.hpp"

#include <algorithm>
#include <set>

#include "grext/exactnum/pell.hpp"

namespace grext {

AutRhoElement aut_identity(const EmbeddedLattice& L) {
  return {FieldMatrix::identity(L.field(), L.ambient_dim()), IntegerMatrix::identity(L.rank())};
}

AutRhoElement aut_compose(const AutRhoElement& a, const AutRhoElement& b) {
  return {a.extension * b.extension, a.T * b.T};
}

AutRhoElement aut_inverse(const AutRhoElement& a) {
  auto Tinv = a.T.unimodular_inverse();
  if (!Tinv) fail("NotSurjective", "det " + a.T.determinant().get_str(), ErrorClass::Internal);
  return {a.extension.inverse(), *Tinv};
}

AutRhoElement aut_power(const AutRhoElement& a, long e) {
  AutRhoElement base = e < 0 ? aut_inverse(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  AutRhoElement acc{FieldMatrix::identity(a.extension(0, 0).field(), a.extension.size()),
                    IntegerMatrix::identity(a.T.rows())};
  while (k) {
    if (k & 1) acc = aut_compose(acc, base);
    base = aut_compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::string matrix_string(const IntegerMatrix& T) { return T.to_string(); }

AutRhoElement is_automorphism(const EmbeddedLattice& L, const FieldMatrix& M) {
  const std::size_t N = L.rank();
  if (M.size() != L.ambient_dim()) {
    fail("ExtensionShape", "expected " + std::to_string(L.ambient_dim()) + "x" +
                               std::to_string(L.ambient_dim()));
  }
  IntegerMatrix T(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    FieldVector img = M.apply(L.column(j));
    auto c = L.integer_coordinates(img);
    if (!c) {
      std::string shown;
      for (const auto& x : img) shown += (shown.empty() ? "" : ",") + x.pretty();
      fail("NotLatticePreserving", "image of generator " + std::to_string(j) + " = (" + shown +
                                       ") is not in Γ");
    }
    T.set_column(j, *c);
  }
  Integer det = T.determinant();
  if (det != 1 && det != -1) {
    fail("NotSurjective", "T = " + T.to_string() + ", det = " + det.get_str());
  }
  AutRhoElement a{M, T};
  if (!check_equivariance(L, a)) {
    fail("EquivarianceFailed", T.to_string(), ErrorClass::Internal);
  }
  return a;
}

bool check_equivariance(const EmbeddedLattice& L, const AutRhoElement& a) {
  const std::size_t N = L.rank();
  std::vector<std::vector<Integer>> samples;
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Integer> e(N);
    e[j] = 1;
    samples.push_back(e);
  }
  std::vector<Integer> all(N);
  for (std::size_t j = 0; j < N; ++j) all[j] = static_cast<long>(j + 1);
  samples.push_back(all);
  for (const auto& g : samples) {
    if (!(a.extension.apply(L.evaluate(g)) == L.evaluate(a.T.apply(g)))) return false;
  }
  return true;
}

IntegerMatrix malcev_lift(const EmbeddedLattice& L, const AutRhoElement& a) {
  // q₀∘T = ᾱ∘q₀ on generators.
  for (std::size_t j = 0; j < L.rank(); ++j) {
    if (!(L.evaluate(a.T.column(j)) == a.extension.apply(L.column(j)))) {
      fail("LiftMismatch", "generator " + std::to_string(j), ErrorClass::Internal);
    }
  }
  return a.T;
}

namespace {

std::vector<Rational> element_coords(const FieldElement& x) { return x.coeffs(); }

}  // namespace

MultiplierOrder multiplier_ring(const EmbeddedLattice& L) {
  if (L.ambient_dim() != 1) {
    fail("AmbientDimUnsupported", "multiplier ring needs n = 1, got " +
                                      std::to_string(L.ambient_dim()));
  }
  const NumberField& K = L.field();
  const auto d = static_cast<std::size_t>(K.degree());
  const std::size_t N = L.rank();
  const RationalMatrix& R = L.solver().residual_matrix();
  const RationalMatrix& S = L.solver().solve_matrix();

  std::vector<FieldElement> powers;
  FieldElement th = FieldElement::generator(K);
  FieldElement acc = FieldElement::one(K);
  for (std::size_t k = 0; k < d; ++k) {
    powers.push_back(acc);
    acc = acc * th;
  }

  // λ = Σ c_k θ^k with λ·v_i ∈ Γ ⊗ Q for all i.
  std::vector<Rational> kernel_seed;
  RationalMatrix cond(N * R.rows(), d);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      auto w = element_coords(powers[k] * L.column(i)[0]);
      auto r = R.apply(w);
      for (std::size_t row = 0; row < R.rows(); ++row) cond(i * R.rows() + row, k) = r[row];
    }
  }
  std::vector<std::vector<Rational>> span;
  if (cond.rows() == 0) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> e(d);
      e[k] = 1;
      span.push_back(e);
    }
  } else {
    span = cond.kernel();
  }
  std::vector<FieldElement> s;
  for (const auto& c : span) s.emplace_back(K, c);
  const std::size_t m = s.size();

  // Integrality: coordinates of s_j·v_i must combine to integers.
  RationalMatrix A(N * N, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < N; ++i) {
      auto c = S.apply(element_coords(s[j] * L.column(i)[0]));
      for (std::size_t r = 0; r < N; ++r) A(i * N + r, j) = c[r];
    }
  }
  std::vector<Rational> all;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) all.push_back(A(r, c));
  }
  Integer den = common_denominator(all);
  IntegerMatrix Aint(A.rows(), m);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) Aint(r, c) = Rational(A(r, c) * den).get_num();
  }
  SmithResult snf = smith_normal_form(Aint);
  auto inv = snf.invariant_factors();
  if (inv.size() != m) fail("MultiplierRank", "degenerate condition matrix", ErrorClass::Internal);

  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 0; j < m; ++j) {
    Rational step(den, inv[j]);
    step.canonicalize();
    FieldElement lam = FieldElement::zero(K);
    for (std::size_t l = 0; l < m; ++l) lam += (step * Rational(snf.V(l, j))) * s[l];
    rows.push_back(lam.coeffs());
  }
  // Canonical basis: HNF of the power-basis coordinates.
  std::vector<Rational> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  Integer cden = common_denominator(flat);
  IntegerMatrix C(m, d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < d; ++k) C(i, k) = Rational(rows[i][k] * cden).get_num();
  }
  HermiteResult h = hermite_normal_form(C);
  MultiplierOrder O;
  O.field = K;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> c(d);
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = Rational(h.H(i, k), cden);
      c[k].canonicalize();
    }
    O.basis.emplace_back(K, c);
  }
  for (const auto& b : O.basis) {
    for (std::size_t i = 0; i < N; ++i) {
      if (!L.integer_coordinates({b * L.column(i)[0]})) {
        fail("MultiplierCheck", b.pretty(), ErrorClass::Internal);
      }
    }
  }
  if (!order_contains(O, FieldElement::one(K))) {
    fail("MultiplierCheck", "1 not in order", ErrorClass::Internal);
  }
  return O;
}

bool order_contains(const MultiplierOrder& O, const FieldElement& x) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : O.basis) cols.push_back(b.coeffs());
  auto solver = SpanSolver::make(cols);
  if (!solver) return false;
  auto c = solver->coordinates(x.coeffs());
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.get_den() == 1; });
}

GroupDescriptor unit_group(const MultiplierOrder& O, const EmbeddedLattice& L) {
  const NumberField& K = O.field;
  GroupDescriptor g;
  g.generators.push_back(is_automorphism(L, -FieldElement::one(K)));
  if (O.rank() == 1) {
    g.name = "Z_2";
    g.complete = true;
    g.invariants = AbelianInvariants{{Integer(2)}, 0};
    return g;
  }
  if (O.rank() == 2) {
    // η with O = Z + Zη from the coordinates of 1.
    std::vector<std::vector<Rational>> cols{O.basis[0].coeffs(), O.basis[1].coeffs()};
    auto one = SpanSolver::make(cols)->coordinates(FieldElement::one(K).coeffs());
    Integer a = (*one)[0].get_num(), c = (*one)[1].get_num();
    Integer gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    FieldElement eta = Rational(-t) * O.basis[0] + Rational(s) * O.basis[1];
    auto mp = minimal_polynomial(eta);
    if (mp.size() != 3) fail("OrderShape", "η of degree " + std::to_string(mp.size() - 1), ErrorClass::Internal);
    Integer tr = -mp[1], nm = mp[0];
    QuadraticUnit u = quadratic_order_unit(tr, nm);
    FieldElement root = Rational(2) * eta - FieldElement::from_rational(K, Rational(tr));
    if (sign_of(root) < 0) root = -root;
    FieldElement eps = Rational(1, 2) * (FieldElement::from_rational(K, Rational(u.x)) +
                                         Rational(u.y) * root);
    if (sign_of(eps - FieldElement::one(K)) <= 0 || !order_contains(O, eps) ||
        !order_contains(O, eps.inverse())) {
      fail("UnitCheck", eps.pretty(), ErrorClass::Internal);
    }
    g.generators.push_back(is_automorphism(L, eps));
    g.name = "Z_2 x Z";
    g.complete = true;
    g.invariants = AbelianInvariants{{Integer(2)}, 1};
    g.note = "fundamental unit norm " + std::to_string(u.norm);
    return g;
  }
  GroupDescriptor partial = bounded_search_descriptor(L, SearchOptions{});
  throw DegreeUnsupportedError("order of rank " + std::to_string(O.rank()), partial);
}

GroupDescriptor bounded_search_descriptor(const EmbeddedLattice& L, const SearchOptions& opt) {
  std::vector<SmallMatrix> found = opt.parallel ? bounded_aut_search_parallel(L, opt.bound)
                                                : bounded_aut_search_serial(L, opt.bound);
  const std::size_t N = L.rank();
  std::set<SmallMatrix> pool(found.begin(), found.end());
  auto mul = [N](const SmallMatrix& a, const SmallMatrix& b) {
    SmallMatrix c(N * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t j = 0; j < N; ++j) c[i * N + j] += a[i * N + k] * b[k * N + j];
      }
    }
    return c;
  };
  auto max_abs = [](const SmallMatrix& a) {
    std::int64_t m = 0;
    for (auto v : a) m = std::max<std::int64_t>(m, v < 0 ? -v : v);
    return m;
  };
  std::vector<SmallMatrix> order = found;
  std::stable_sort(order.begin(), order.end(), [&](const SmallMatrix& a, const SmallMatrix& b) {
    return max_abs(a) < max_abs(b);
  });
  SmallMatrix id(N * N, 0);
  for (std::size_t i = 0; i < N; ++i) id[i * N + i] = 1;
  std::set<SmallMatrix> closure{id};
  std::vector<SmallMatrix> gens;
  for (const auto& cand : order) {
    if (closure.count(cand)) continue;
    gens.push_back(cand);
    // Closure inside the found set under right multiplication by generators.
    std::vector<SmallMatrix> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<SmallMatrix> next;
      for (const auto& x : frontier) {
        for (const auto& gg : gens) {
          for (const auto& y : {mul(x, gg), mul(gg, x)}) {
            if (pool.count(y) && closure.insert(y).second) next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  std::sort(gens.begin(), gens.end());
  AutSearchProblem prob(L, opt.bound);
  GroupDescriptor g;
  for (const auto& T : gens) {
    AutRhoElement a = is_automorphism(L, prob.extension(T));
    g.generators.push_back(a);
  }
  g.complete = false;
  g.name = "bounded-search subgroup (B=" + std::to_string(opt.bound) + "): " +
           std::to_string(found.size()) + " elements, " + std::to_string(gens.size()) +
           " generators";
  g.note = "membership certified for every listed generator; completeness not certified";
  return g;
}

GroupDescriptor aut_rho(const EmbeddedLattice& L, const SearchOptions& opt) {
  if (L.ambient_dim() == 1) {
    MultiplierOrder O = multiplier_ring(L);
    try {
      return unit_group(O, L);
    } catch (const DegreeUnsupportedError&) {
      return bounded_search_descriptor(L, opt);
    }
  }
  return bounded_search_descriptor(L, opt);
}

OutRhoReport out_rho(const EmbeddedLattice& L, const SearchOptions& opt) {
  OutRhoReport r;
  r.out = aut_rho(L, opt);
  r.inner.name = "trivial";
  r.inner.complete = true;
  r.inner.invariants = AbelianInvariants{};
  AbelianInvariants z{{}, L.rank()};
  r.center.name = z.name();
  r.center.complete = true;
  r.center.invariants = z;
  return r;
}

ProductAutReport product_aut(const EmbeddedLattice& L, const SearchOptions& opt) {
  if (L.ambient_dim() != 1) fail("AmbientDimUnsupported", "product of n = 1 lattices only");
  GroupDescriptor base = aut_rho(L, opt);
  if (!base.complete) fail("IncompleteBase", base.name);
  const NumberField& K = L.field();
  const std::size_t N = L.rank();
  FieldElement zero = FieldElement::zero(K), one = FieldElement::one(K);
  std::vector<FieldVector> cols;
  for (std::size_t i = 0; i < N; ++i) cols.push_back({L.column(i)[0], zero});
  for (std::size_t i = 0; i < N; ++i) cols.push_back({zero, L.column(i)[0]});
  ProductAutReport r;
  r.doubled = EmbeddedLattice::make(K, 2, cols);
  r.swap = is_automorphism(r.doubled, FieldMatrix(2, {zero, one, one, zero}));
  r.group.generators.push_back(r.swap);
  for (const auto& g : base.generators) {
    r.group.generators.push_back(is_automorphism(r.doubled, FieldMatrix(2, {g.scalar(), zero, zero, one})));
  }
  for (const auto& g : base.generators) {
    r.group.generators.push_back(is_automorphism(r.doubled, FieldMatrix(2, {one, zero, zero, g.scalar()})));
  }
  std::string a = base.name;
  if (a.find(" x ") != std::string::npos) a = "(" + a + ")";
  r.group.name = "Z_2 ⋉ (" + a + " × " + a + ")";
  r.group.complete = true;
  return r;
}

}  // namespace grext
