#include "grext/exactnum/pell.hpp"

#include <map>
#include <utility>

#include "grext/error.hpp"

namespace grext {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

PellSolution pell_fundamental_unit(const Integer& D) {
  if (D < 2) fail("NotPositiveNonsquare", D.get_str());
  if (is_perfect_square(D)) fail("PerfectSquare", D.get_str());
  const Integer a0 = isqrt(D);
  Integer m = 0, d = 1, a = a0;
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, q = 1;
  std::size_t r = 0;
  while (true) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    ++r;
    if (a == 2 * a0) break;
    Integer pn = a * p + p_prev;
    Integer qn = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(pn);
    q_prev = std::move(q);
    q = std::move(qn);
  }
  PellSolution s{D, p, q, r % 2 == 0 ? 1 : -1, r};
  if (p * p - D * q * q != s.norm) {
    fail("PellCheckFailed", D.get_str(), ErrorClass::Internal);
  }
  return s;
}

QuadraticUnit quadratic_order_unit(const Integer& t, const Integer& n) {
  const Integer delta = t * t - 4 * n;
  if (sgn(delta) <= 0 || is_perfect_square(delta)) {
    fail("NotRealQuadratic", "discriminant " + delta.get_str());
  }
  const Integer s = isqrt(delta);
  // Complete quotients (P + √Δ)/Q, Q | Δ − P², starting at η = (t + √Δ)/2.
  Integer P = t, Q = 2;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<std::pair<Integer, Integer>> states;
  auto floor_div = [](const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  };
  std::size_t start = 0;
  while (true) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      start = it->second;
      break;
    }
    seen.emplace(key, states.size());
    states.push_back(key);
    Integer a = sgn(Q) > 0 ? floor_div(P + s, Q) : floor_div(-P - s - 1, -Q);
    Integer Pn = a * Q - P;
    Integer Qn = (delta - Pn * Pn) / Q;
    P = std::move(Pn);
    Q = std::move(Qn);
  }
  // ε = product of the periodic complete quotients, held as u + v√Δ.
  Rational u = 1, v = 0;
  for (std::size_t k = start; k < states.size(); ++k) {
    const auto& [Pk, Qk] = states[k];
    Rational nu = (u * Pk + v * delta) / Qk;
    Rational nv = (u + v * Pk) / Qk;
    u = std::move(nu);
    v = std::move(nv);
  }
  Rational x2 = 2 * u, y2 = 2 * v;
  if (x2.get_den() != 1 || y2.get_den() != 1) {
    fail("UnitNotIntegral", to_short_string(u) + "+" + to_short_string(v) + "√Δ",
         ErrorClass::Internal);
  }
  QuadraticUnit q;
  q.discriminant = delta;
  q.x = x2.get_num();
  q.y = y2.get_num();
  q.period = states.size() - start;
  Integer nrm4 = q.x * q.x - delta * q.y * q.y;
  if (nrm4 == 4) {
    q.norm = 1;
  } else if (nrm4 == -4) {
    q.norm = -1;
  } else {
    fail("UnitNormCheck", nrm4.get_str(), ErrorClass::Internal);
  }
  Integer parity = q.x - t * q.y;
  if (!mpz_even_p(parity.get_mpz_t())) {
    fail("UnitOutsideOrder", q.x.get_str() + "," + q.y.get_str(), ErrorClass::Internal);
  }
  return q;
}

}  // namespace grext
