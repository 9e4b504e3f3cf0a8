#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grext/densegroup/automorphism.hpp"
#include "grext/grpd/finite_group.hpp"

namespace grext {

/// μ: Γ → E with an action of E on Γ, all finite and tabulated.
struct FiniteCrossedModule {
  std::string name;
  FiniteGroup gamma;
  FiniteGroup E;
  std::vector<int> mu;                   ///< μ(γ) for each γ
  std::vector<std::vector<int>> action;  ///< action[e][γ] = e.γ

  int act(int e, int g) const { return action[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)]; }

  /// Γ → 1.
  static FiniteCrossedModule to_trivial(const FiniteGroup& g);
  /// Z_m → Z_k, k | m, reduction with trivial action.
  static FiniteCrossedModule reduction(int m, int k);
  /// Inclusion of a normal subgroup with the conjugation action.
  static FiniteCrossedModule normal_inclusion(const FiniteGroup& A, const std::vector<int>& sub,
                                              const std::string& sub_name);
  /// Identity Γ → Γ with conjugation.
  static FiniteCrossedModule identity(const FiniteGroup& g);
};

struct CrossedModuleReport {
  std::string spec;
  bool mu_homomorphism = true;
  bool action_homomorphism = true;  ///< (e1e2).γ = e1.(e2.γ)
  bool action_by_automorphisms = true;
  bool equivariance = true;         ///< μ(e.γ) = e μ(γ) e⁻¹
  bool peiffer = true;              ///< μ(γ1).γ2 = γ1 γ2 γ1⁻¹
  std::size_t checks = 0;
  std::string kernel;
  std::string image;
  std::string cokernel;
  std::vector<std::string> flags;
  std::vector<std::string> failures;

  bool ok() const {
    return mu_homomorphism && action_homomorphism && action_by_automorphisms && equivariance && peiffer;
  }
};

/// Exhaustive check over all elements.
CrossedModuleReport crossed_module_verify(const FiniteCrossedModule& spec);

enum class LatticeCrossedKind {
  Ad,          ///< Γ → Aut(ρ), γ ↦ ad(γ)
  Semidirect,  ///< Γ → Aut(ρ)⋉G, γ ↦ μ(γ)
};

/// Sampled check on random words in the generators of `aut`.
CrossedModuleReport crossed_module_verify_lattice(const EmbeddedLattice& L, const GroupDescriptor& aut,
                                                  LatticeCrossedKind kind, std::size_t samples,
                                                  std::uint64_t seed);

/// Rank of ρ as a map Z^N → Q^(n·d): kernel of μ in the semidirect case.
AbelianInvariants rho_kernel(const EmbeddedLattice& L);

}  // namespace grext
