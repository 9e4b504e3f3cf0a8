#include "grext/exactnum/rational.hpp"

#include <cctype>
#include <limits>

namespace grext {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Integer> parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) return std::nullopt;
  Integer z(std::string(body), 10);
  if (negative) z = -z;
  return z;
}

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto z = parse_integer(text);
    if (!z) return std::nullopt;
    return Rational(*z);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!num || !all_digits(den_text)) return std::nullopt;
  Integer den(std::string(den_text), 10);
  if (den == 0) return std::nullopt;
  Rational r(*num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

std::optional<std::int64_t> to_int64(const Integer& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace grext
