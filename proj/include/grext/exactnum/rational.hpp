#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grext {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (no decimal point, no exponent). Returns nullopt on
/// malformed text or a zero denominator. The result is canonicalized.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);

/// Canonical "p/q" form with q > 0; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& r);

/// Shortest form: "p" for integers, "p/q" otherwise.
std::string to_short_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sgn(const Rational& r) { return ::sgn(r); }
inline int sgn(const Integer& z) { return ::sgn(z); }

std::optional<std::int64_t> to_int64(const Integer& z);

/// lcm of all denominators (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace grext
