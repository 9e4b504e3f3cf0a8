#pragma once

#include <string>
#include <string_view>

#include "grext/exactnum/number_field.hpp"

namespace grext {

/// Orientation-preserving affine map x ↦ a·x + b of R, a > 0.
struct GAElement {
  FieldElement a;
  FieldElement b;

  static GAElement identity(const NumberField& f) {
    return {FieldElement::one(f), FieldElement::zero(f)};
  }
  /// Throws NotOrientationPreserving unless a > 0.
  static GAElement make(FieldElement a, FieldElement b);
  friend bool operator==(const GAElement& x, const GAElement& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// h2 after h1: (a2·a1, a2·b1 + b2).
GAElement ga_compose(const GAElement& h2, const GAElement& h1);
GAElement ga_inverse(const GAElement& h);

}  // namespace grext
