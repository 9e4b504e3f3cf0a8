#include "grext/exactnum/number_field.hpp"

#include <sstream>

#include "grext/error.hpp"

namespace grext {

namespace {

const Rational& refinement_width() {
  static const Rational w = [] {
    Rational r(1);
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), 64);
    return r;
  }();
  return w;
}

std::string poly_witness(const std::vector<Integer>& c) {
  return Polynomial::from_integers(c).to_string();
}

}  // namespace

NumberField NumberField::make(const std::vector<Integer>& min_poly, const Rational& lo,
                              const Rational& hi) {
  if (min_poly.size() < 2) fail("NotMonic", "degree must be at least 1");
  if (min_poly.back() != 1) fail("NotMonic", poly_witness(min_poly));
  if (!(lo < hi)) fail("EmptyInterval", to_short_string(lo) + " >= " + to_short_string(hi));
  Polynomial p = Polynomial::from_integers(min_poly);
  if (Polynomial::gcd(p, p.derivative()).degree() > 0) {
    fail("NotSquarefree", p.to_string());
  }
  int roots = count_roots_open(p, lo, hi);
  std::string where = p.to_string() + " on (" + to_short_string(lo) + "," + to_short_string(hi) + ")";
  if (roots == 0) fail("NoRootInInterval", where);
  if (roots > 1) fail("MultipleRootsInInterval", where + ": " + std::to_string(roots) + " roots");

  auto data = std::make_shared<Data>();
  data->poly = p;
  data->ints = min_poly;
  data->lo = lo;
  data->hi = hi;

  Rational a = lo, b = hi;
  std::optional<Rational> exact;
  if (p.degree() == 1) exact = Rational(-min_poly[0]);
  // Bisection with a Sturm count until the endpoints bracket a sign change.
  while (!exact && (p.sign_at(a) * p.sign_at(b) >= 0 || b - a >= refinement_width())) {
    Rational m = (a + b) / 2;
    int sm = p.sign_at(m);
    if (sm == 0) {
      exact = m;
      break;
    }
    int sa = p.sign_at(a), sb = p.sign_at(b);
    bool left;
    if (sa != 0 && sb != 0) {
      left = sa * sm < 0;
    } else {
      left = count_roots_open(p, a, m) == 1;
    }
    if (left) {
      b = m;
    } else {
      a = m;
    }
  }
  if (exact) {
    data->iso = {*exact, *exact};
  } else {
    data->iso = {a, b};
  }
  data->exact_root = exact;
  NumberField f;
  f.data_ = std::move(data);
  return f;
}

NumberField NumberField::rationals() {
  static const NumberField q = make({Integer(0), Integer(1)}, Rational(-1), Rational(1));
  return q;
}

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.data_ == b.data_) return true;
  if (!(a.data_->poly == b.data_->poly)) return false;
  if (a.exact_root() || b.exact_root()) return a.exact_root() == b.exact_root();
  const auto& x = a.data_->iso;
  const auto& y = b.data_->iso;
  Rational lo = x.lo > y.lo ? x.lo : y.lo;
  Rational hi = x.hi < y.hi ? x.hi : y.hi;
  if (!(lo < hi)) return false;
  return count_roots_open(a.data_->poly, lo, hi) == 1;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  auto d = static_cast<std::size_t>(field_->degree());
  if (c_.size() > d) {
    *this = from_polynomial(*field_, Polynomial(c_));
    return;
  }
  c_.resize(d);
  for (auto& c : c_) c.canonicalize();
}

FieldElement FieldElement::from_rational(const NumberField& f, const Rational& r) {
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()));
  c[0] = r;
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::generator(const NumberField& f) {
  return from_polynomial(f, Polynomial::monomial(1, 1));
}

FieldElement FieldElement::from_polynomial(const NumberField& f, const Polynomial& q) {
  Polynomial r = Polynomial::mod(q, f.min_poly());
  FieldElement e;
  e.field_ = f;
  e.c_ = r.coeffs();
  e.c_.resize(static_cast<std::size_t>(f.degree()));
  return e;
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) return false;
  }
  return true;
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    fail("MixedFields", a.field().min_poly().to_string() + " vs " +
                            b.field().min_poly().to_string());
  }
}

}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  FieldElement r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  FieldElement r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
  return r;
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const std::size_t d = a.c_.size();
  if (d == 1) return FieldElement(a.field(), {a.c_[0] * b.c_[0]});
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  // p is monic with integer coefficients: fold x^k = -sum p_i x^(k-d+i).
  const auto& p = a.field().min_poly_integers();
  for (std::size_t k = prod.size(); k-- > d;) {
    if (sgn(prod[k]) == 0) continue;
    Rational top = prod[k];
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= top * p[i];
    prod[k] = 0;
  }
  prod.resize(d);
  FieldElement r;
  r.field_ = a.field_;
  r.c_ = std::move(prod);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of 0");
  const Polynomial& p = field().min_poly();
  // Extended Euclid: track s with s·a ≡ r (mod p).
  Polynomial r0 = p, r1 = as_polynomial();
  Polynomial s0, s1 = Polynomial::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = Polynomial::divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) {
    fail("ReduciblePolynomialDetected",
         "gcd(" + as_polynomial().to_string("θ") + ", p) = " + r0.monic().to_string());
  }
  Rational inv_c = 1 / r1.coeff(0);
  return from_polynomial(field(), inv_c * s1);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (b.is_zero()) fail("DivisionByZero", "divisor is 0");
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  return a.field() == b.field() && a.c_ == b.c_;
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc = one(field());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::vector<std::string> FieldElement::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(to_fraction_string(c));
  return out;
}

std::string FieldElement::pretty() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    std::string mono = k == 0 ? "" : (k == 1 ? "θ" : "θ^" + std::to_string(k));
    std::string coef;
    if (k == 0) {
      coef = to_short_string(a);
    } else if (a == 1) {
      coef = "";
    } else if (a.get_den() == 1) {
      coef = a.get_num().get_str();
    } else {
      coef = "(" + to_short_string(a) + ")";
    }
    if (neg) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += coef + mono;
  }
  return out.empty() ? "0" : out;
}

double FieldElement::approx() const {
  const auto& iso = field().isolating_interval();
  Rational mid = (iso.lo + iso.hi) / 2;
  return as_polynomial().eval(mid).get_d();
}

FieldElement arith(ArithKind kind, const FieldElement& a, const FieldElement& b) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
    case ArithKind::Div: return a / b;
  }
  fail("InvalidArithKind", std::to_string(static_cast<int>(kind)), ErrorClass::Internal);
}

int sign_of(const FieldElement& a) {
  if (a.is_zero()) return 0;
  const NumberField& f = a.field();
  Polynomial q = a.as_polynomial();
  if (f.exact_root()) return q.sign_at(*f.exact_root());
  RationalInterval x = f.isolating_interval();
  const Polynomial& p = f.min_poly();
  int sp_lo = p.sign_at(x.lo);
  for (int step = 0; step <= 64; ++step) {
    RationalInterval v = interval_eval(q, x);
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    if (step == 64) break;
    Rational m = (x.lo + x.hi) / 2;
    int sm = p.sign_at(m);
    if (sm == 0) return q.sign_at(m);
    if (sm == sp_lo) {
      x.lo = m;
    } else {
      x.hi = m;
    }
  }
  int taq = tarski_query(p, q, x.lo, x.hi);
  if (taq == 0) {
    fail("ReduciblePolynomialDetected",
         q.to_string("θ") + " vanishes at the root of " + p.to_string());
  }
  return taq;
}

RationalMatrix multiplication_matrix(const FieldElement& a) {
  const auto d = static_cast<std::size_t>(a.field().degree());
  RationalMatrix m(d, d);
  FieldElement col = a;
  FieldElement theta = FieldElement::generator(a.field());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coeffs()[i];
    col = col * theta;
  }
  return m;
}

Polynomial characteristic_polynomial(const FieldElement& a) {
  // Faddeev-LeVerrier.
  RationalMatrix m = multiplication_matrix(a);
  const std::size_t d = m.rows();
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  RationalMatrix mk(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < d; ++i) next(i, i) += c[d - k + 1];
    mk = next;
    RationalMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr += am(i, i);
    c[d - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Integer> minimal_polynomial(const FieldElement& a) {
  Polynomial chi = characteristic_polynomial(a);
  Polynomial g = Polynomial::gcd(chi, chi.derivative());
  Polynomial sqfree = Polynomial::divmod(chi, g).first;
  return sqfree.primitive_integer_coeffs();
}

FieldElement evaluate_at(const Polynomial& q, const FieldElement& a) {
  FieldElement acc = FieldElement::zero(a.field());
  for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) {
    acc = acc * a + FieldElement::from_rational(a.field(), *it);
  }
  return acc;
}

FieldElement parse_field_element(const NumberField& f, const std::vector<std::string>& coeffs) {
  if (coeffs.size() > static_cast<std::size_t>(f.degree())) {
    fail("CoefficientCount", std::to_string(coeffs.size()) + " > degree " +
                                 std::to_string(f.degree()));
  }
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    auto r = parse_rational(s);
    if (!r) fail("BadRational", s);
    c.push_back(*r);
  }
  return FieldElement(f, std::move(c));
}

}  // namespace grext
