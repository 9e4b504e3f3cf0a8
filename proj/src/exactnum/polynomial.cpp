#include "grext/exactnum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "grext/error.hpp"

namespace grext {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const auto& z : coeffs) q.emplace_back(z);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> q(static_cast<std::size_t>(degree) + 1);
  q.back() = c;
  return Polynomial(std::move(q));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * static_cast<long>(k);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= lc;
  return Polynomial(std::move(out));
}

std::vector<Integer> Polynomial::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Integer den = common_denominator(coeffs_);
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Rational scaled = c * den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& z : out) z /= g;
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lb;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (sgn(q) == 0) continue;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= q * b.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += to_short_string(mag);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

RationalInterval interval_add(const RationalInterval& a,
                              const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval interval_mul(const RationalInterval& a,
                              const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = p1, hi = p1;
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (*p > hi) hi = *p;
  }
  return {lo, hi};
}

RationalInterval interval_eval(const Polynomial& p, const RationalInterval& x) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  RationalInterval acc{c.back(), c.back()};
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = interval_mul(acc, x);
    acc.lo += c[static_cast<std::size_t>(k)];
    acc.hi += c[static_cast<std::size_t>(k)];
  }
  return acc;
}

std::vector<Polynomial> signed_remainder_sequence(const Polynomial& p,
                                                  const Polynomial& q) {
  std::vector<Polynomial> seq;
  seq.push_back(p);
  if (q.is_zero()) return seq;
  seq.push_back(q);
  while (true) {
    Polynomial r = -Polynomial::mod(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++variations;
    last = v;
  }
  return variations;
}

int count_roots_open(const Polynomial& p, const Rational& lo,
                     const Rational& hi) {
  // For squarefree p, V(a) - V(b) counts roots in (a, b].
  auto seq = signed_remainder_sequence(p, p.derivative());
  int count = sign_variations(seq, lo) - sign_variations(seq, hi);
  if (p.sign_at(hi) == 0) --count;
  return count;
}

int tarski_query(const Polynomial& p, const Polynomial& q, const Rational& lo,
                 const Rational& hi) {
  auto seq = signed_remainder_sequence(p, p.derivative() * q);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

}  // namespace grext
