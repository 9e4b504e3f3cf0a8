#pragma once

#include <array>

#include "grext/densegroup/lattice.hpp"
#include "grext/grpd/ga.hpp"

namespace grext {

/// Γ₂ = Z ⋉_A Z² for A ∈ SL₂(Z) hyperbolic, embedded in GA.
struct CarriereReport {
  std::array<long, 4> A{};  ///< row-major a11, a12, a21, a22
  NumberField field = NumberField::rationals();  ///< Q(√disc), θ = √disc
  Integer disc;
  FieldElement lambda1;  ///< 0 < λ₁ < 1
  FieldElement lambda2;  ///< λ₂ = λ₁⁻¹ > 1
  FieldVector V1;        ///< (1, (λ₁ − a11)/a12)
  FieldVector V2;
  FieldVector left;      ///< ℓ with ℓ·A = λ₁·ℓ, ℓ = (1, (λ₁ − a11)/a21)
  bool eigen_verified = false;
  bool product_is_one = false;
  bool ordering_verified = false;
  GAElement ga_A;   ///< x ↦ λ₁·x
  GAElement ga_V1;  ///< x ↦ x + ℓ₁
  GAElement ga_V2;  ///< x ↦ x + ℓ₂
  /// A·V_j·A⁻¹ = V1^{A_1j}·V2^{A_2j} in GA, checked exactly.
  bool conjugation_verified = false;
};

CarriereReport carriere_family(const std::array<long, 4>& A);

/// Evaluates a word over A, A^-1, V1, V2, V1^-1, V2^-1 (also A⁻¹, V₁, V₂,
/// V₁⁻¹, V₂⁻¹) left to right. Throws BadWord on unknown tokens.
GAElement ga_word_eval(const CarriereReport& r, std::string_view word);

}  // namespace grext
