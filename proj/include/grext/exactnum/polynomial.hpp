#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grext/exactnum/rational.hpp"

namespace grext {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial from_integers(const std::vector<Integer>& coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  Polynomial derivative() const;
  Polynomial monic() const;

  /// Primitive integer multiple with positive leading coefficient.
  std::vector<Integer> primitive_integer_coeffs() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);
  static Polynomial mod(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).second;
  }
  /// Monic gcd (zero only if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return hi - lo; }
};

RationalInterval interval_add(const RationalInterval& a,
                              const RationalInterval& b);
RationalInterval interval_mul(const RationalInterval& a,
                              const RationalInterval& b);
/// Horner evaluation of p over the interval x.
RationalInterval interval_eval(const Polynomial& p, const RationalInterval& x);

/// Signed remainder sequence S0 = p, S1 = q, S_{k+1} = -rem(S_{k-1}, S_k).
std::vector<Polynomial> signed_remainder_sequence(const Polynomial& p,
                                                  const Polynomial& q);
/// Number of sign variations of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);

/// Number of distinct real roots of the squarefree polynomial p in the open
/// interval (lo, hi), lo < hi.
int count_roots_open(const Polynomial& p, const Rational& lo,
                     const Rational& hi);

/// Tarski query: sum over roots x of p in (lo, hi) of sign(q(x)).
/// Requires p(lo) != 0 and p(hi) != 0.
int tarski_query(const Polynomial& p, const Polynomial& q, const Rational& lo,
                 const Rational& hi);

}  // namespace grext
