#include "grext/densegroup/carriere.hpp"

#include <sstream>

#include "grext/error.hpp"
#include "grext/exactnum/pell.hpp"

namespace grext {

CarriereReport carriere_family(const std::array<long, 4>& A) {
  const long a11 = A[0], a12 = A[1], a21 = A[2], a22 = A[3];
  const long det = a11 * a22 - a12 * a21;
  std::string shown = "[[" + std::to_string(a11) + "," + std::to_string(a12) + "],[" +
                      std::to_string(a21) + "," + std::to_string(a22) + "]]";
  if (det != 1) fail("NotSL2", shown + " has det " + std::to_string(det));
  const long tr = a11 + a22;
  if (tr <= 2) fail("TraceTooSmall", shown + " has trace " + std::to_string(tr));

  CarriereReport r;
  r.A = A;
  r.disc = Integer(tr) * tr - 4;
  Integer s = isqrt(r.disc);
  r.field = NumberField::make({-r.disc, Integer(0), Integer(1)}, Rational(s), Rational(s + 1));
  const NumberField& K = r.field;
  FieldElement theta = FieldElement::generator(K);
  FieldElement one = FieldElement::one(K);
  auto q = [&](long v) { return FieldElement::from_rational(K, Rational(v)); };
  r.lambda1 = Rational(1, 2) * (q(tr) - theta);
  r.lambda2 = Rational(1, 2) * (q(tr) + theta);
  r.V1 = {one, (r.lambda1 - q(a11)) * q(a12).inverse()};
  r.V2 = {one, (r.lambda2 - q(a11)) * q(a12).inverse()};
  r.left = {one, (r.lambda1 - q(a11)) * q(a21).inverse()};

  FieldMatrix M(2, {q(a11), q(a12), q(a21), q(a22)});
  r.eigen_verified = M.apply(r.V1) == scale(r.lambda1, r.V1) &&
                     M.apply(r.V2) == scale(r.lambda2, r.V2);
  r.product_is_one = r.lambda1 * r.lambda2 == one;
  r.ordering_verified = sign_of(r.lambda1) > 0 && sign_of(r.lambda1 - one) < 0 &&
                        sign_of(r.lambda2 - one) > 0;

  r.ga_A = GAElement::make(r.lambda1, FieldElement::zero(K));
  r.ga_V1 = GAElement::make(one, r.left[0]);
  r.ga_V2 = GAElement::make(one, r.left[1]);

  auto power = [](const GAElement& g, long e) {
    GAElement base = e < 0 ? ga_inverse(g) : g;
    GAElement acc = GAElement::identity(g.a.field());
    for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = ga_compose(acc, base);
    return acc;
  };
  GAElement Ainv = ga_inverse(r.ga_A);
  bool ok = true;
  const GAElement* V[2] = {&r.ga_V1, &r.ga_V2};
  for (int j = 0; j < 2; ++j) {
    GAElement lhs = ga_compose(ga_compose(r.ga_A, *V[j]), Ainv);
    GAElement rhs = ga_compose(power(r.ga_V1, A[static_cast<std::size_t>(j)]),
                               power(r.ga_V2, A[static_cast<std::size_t>(2 + j)]));
    ok = ok && lhs == rhs;
  }
  r.conjugation_verified = ok;
  if (!(r.eigen_verified && r.product_is_one && r.ordering_verified && r.conjugation_verified)) {
    fail("CarriereCheck", shown, ErrorClass::Internal);
  }
  return r;
}

GAElement ga_word_eval(const CarriereReport& r, std::string_view word) {
  // Normalize the unicode forms to ASCII tokens.
  std::string w(word);
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t p = w.find(from); p != std::string::npos; p = w.find(from, p + to.size())) {
      w.replace(p, from.size(), to);
    }
  };
  replace_all("⁻¹", "^-1");
  replace_all("₁", "1");
  replace_all("₂", "2");
  replace_all("·", " ");
  replace_all("*", " ");
  std::istringstream in(w);
  std::string tok;
  GAElement acc = GAElement::identity(r.field);
  while (in >> tok) {
    GAElement g;
    bool inv = false;
    std::string base = tok;
    if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
      inv = true;
      base.resize(base.size() - 3);
    }
    if (base == "A") {
      g = r.ga_A;
    } else if (base == "V1") {
      g = r.ga_V1;
    } else if (base == "V2") {
      g = r.ga_V2;
    } else {
      fail("BadWord", "unknown token '" + tok + "'");
    }
    acc = ga_compose(acc, inv ? ga_inverse(g) : g);
  }
  return acc;
}

}  // namespace grext
