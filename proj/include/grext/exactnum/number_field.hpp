#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grext/exactnum/polynomial.hpp"
#include "grext/exactnum/rational_matrix.hpp"

namespace grext {

/// Q[x]/(p) together with a real embedding, fixed by an interval that
/// isolates one real root of p. Copies share the validated data.
class NumberField {
 public:
  /// Validates p (monic, squarefree, integer coefficients ascending) and
  /// refines the interval until it isolates a single root to width < 2^-64.
  static NumberField make(const std::vector<Integer>& min_poly, const Rational& lo,
                          const Rational& hi);
  /// Q itself (p = x).
  static NumberField rationals();

  int degree() const { return data_->poly.degree(); }
  const Polynomial& min_poly() const { return data_->poly; }
  const std::vector<Integer>& min_poly_integers() const { return data_->ints; }
  /// The interval as declared by the caller.
  const Rational& declared_lo() const { return data_->lo; }
  const Rational& declared_hi() const { return data_->hi; }
  /// Current isolating interval; open, p nonzero at both ends unless the root
  /// is rational, in which case exact_root() is set.
  const RationalInterval& isolating_interval() const { return data_->iso; }
  const std::optional<Rational>& exact_root() const { return data_->exact_root; }

  friend bool operator==(const NumberField& a, const NumberField& b);
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  struct Data {
    Polynomial poly;
    std::vector<Integer> ints;
    Rational lo, hi;
    RationalInterval iso;
    std::optional<Rational> exact_root;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of a NumberField as power-basis coordinates (1, θ, ..., θ^(d-1)).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(NumberField field, std::vector<Rational> coeffs);
  static FieldElement from_rational(const NumberField& f, const Rational& r);
  static FieldElement zero(const NumberField& f) { return from_rational(f, 0); }
  static FieldElement one(const NumberField& f) { return from_rational(f, 1); }
  /// θ, the class of x.
  static FieldElement generator(const NumberField& f);
  /// Reduction of a polynomial in θ.
  static FieldElement from_polynomial(const NumberField& f, const Polynomial& q);

  const NumberField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Polynomial as_polynomial() const { return Polynomial(c_); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& r, const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  /// Exact coordinates as "p/q" strings.
  std::vector<std::string> to_strings() const;
  /// Human form such as "1+θ", "-1", "(1/2)θ", "θ^2".
  std::string pretty() const;
  double approx() const;

 private:
  std::optional<NumberField> field_;
  std::vector<Rational> c_;
};

enum class ArithKind { Add, Sub, Mul, Div };
FieldElement arith(ArithKind kind, const FieldElement& a, const FieldElement& b);

/// Sign under the declared real embedding.
int sign_of(const FieldElement& a);
inline int compare(const FieldElement& a, const FieldElement& b) { return sign_of(a - b); }

/// Matrix of multiplication by a in the power basis (column j = a·θ^j).
RationalMatrix multiplication_matrix(const FieldElement& a);
/// Characteristic polynomial of multiplication_matrix(a), rational, monic.
Polynomial characteristic_polynomial(const FieldElement& a);
/// Minimal polynomial over Q as primitive integer coefficients, ascending,
/// positive leading coefficient.
std::vector<Integer> minimal_polynomial(const FieldElement& a);
/// Evaluates q(a) exactly with q given in rational coefficients.
FieldElement evaluate_at(const Polynomial& q, const FieldElement& a);

/// Parses power-basis coordinates; missing trailing entries are zero.
FieldElement parse_field_element(const NumberField& f, const std::vector<std::string>& coeffs);

}  // namespace grext
