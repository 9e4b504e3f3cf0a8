#include "grext/grpd/ga.hpp"

#include "grext/error.hpp"

namespace grext {

GAElement GAElement::make(FieldElement a, FieldElement b) {
  if (a.field() != b.field()) fail("MixedFields", "GA element components");
  if (sign_of(a) <= 0) fail("NotOrientationPreserving", "a = " + a.pretty());
  return {std::move(a), std::move(b)};
}

GAElement ga_compose(const GAElement& h2, const GAElement& h1) {
  if (h2.a.field() != h1.a.field()) fail("MixedFields", "ga_compose");
  return {h2.a * h1.a, h2.a * h1.b + h2.b};
}

GAElement ga_inverse(const GAElement& h) {
  FieldElement inv = h.a.inverse();
  return {inv, -(inv * h.b)};
}

}  // namespace grext
