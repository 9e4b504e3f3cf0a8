#pragma once

#include <string>
#include <vector>

#include "grext/densegroup/automorphism.hpp"

namespace grext {

// G is written additively: the multiplicative g⁻¹ of the formulas becomes -g,
// and ρ(γ)·x becomes ρ(γ) + x.

/// Arrow (γ, x) of Γ⋉G from x to ρ(γ) + x.
struct GroupoidElement {
  std::vector<Integer> gamma;
  FieldVector x;
  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.gamma == b.gamma && a.x == b.x;
  }
};

inline const FieldVector& source(const GroupoidElement& e) { return e.x; }
FieldVector target(const EmbeddedLattice& L, const GroupoidElement& e);
GroupoidElement groupoid_unit(const EmbeddedLattice& L, const FieldVector& x);
GroupoidElement groupoid_inverse(const EmbeddedLattice& L, const GroupoidElement& e);
/// e2 ∘ e1; requires source(e2) = target(e1).
GroupoidElement compose(const EmbeddedLattice& L, const GroupoidElement& e2,
                        const GroupoidElement& e1);

/// (α, g) ∈ Aut(ρ) ⋉ G ≅ Aut(Γ⋉G).
struct AutGroupoidElement {
  AutRhoElement alpha;
  FieldVector g;
  friend bool operator==(const AutGroupoidElement& a, const AutGroupoidElement& b) {
    return a.alpha == b.alpha && a.g == b.g;
  }
};

AutGroupoidElement aut_pair_identity(const EmbeddedLattice& L);
/// (α, g)(α', g') = (αα', g + ᾱ(g')).
AutGroupoidElement aut_compose(const AutGroupoidElement& p, const AutGroupoidElement& q);
/// (α, g)⁻¹ = (α⁻¹, -ᾱ⁻¹(g)).
AutGroupoidElement aut_inverse(const AutGroupoidElement& p);

/// ψ(α, g)(γ, x) = (α(γ), ᾱ(x) - g).
GroupoidElement psi_apply(const AutGroupoidElement& p, const GroupoidElement& e);
/// Induced map on objects, φ₀(x) = ᾱ(x) - g.
FieldVector phi0(const AutGroupoidElement& p, const FieldVector& x);

/// μ(γ) = (ad(γ), -ρ(γ)); ad(γ) is the identity for abelian Γ.
AutGroupoidElement mu(const EmbeddedLattice& L, const std::vector<Integer>& gamma);

struct NormalityReport {
  bool holds = false;
  AutGroupoidElement lhs;  ///< p·μ(γ)·p⁻¹
  AutGroupoidElement rhs;  ///< μ(α(γ))
  std::string witness;
};
NormalityReport check_mu_normality(const EmbeddedLattice& L, const AutGroupoidElement& p,
                                   const std::vector<Integer>& gamma);

std::string vector_string(const FieldVector& v);

}  // namespace grext
