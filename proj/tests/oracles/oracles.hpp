#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grext/classify/nerve.hpp"
#include "grext/densegroup/lattice.hpp"
#include "grext/exactnum/rational.hpp"
#include "grext/grpd/finite_group.hpp"

namespace oracle {

using grext::Integer;

struct PellPair {
  Integer x, y;
  int norm = 0;
};

/// Smallest y ≤ ymax with D y² ± 1 a square.
std::optional<PellPair> pell_bruteforce(long D, long ymax);

/// Every T ∈ [-B, B]^{2×2} with det ±1 for which some λ satisfies
/// λ·v_j = Σ_i v_i T_ij on a rank-2 lattice in R. Row-major.
std::vector<std::array<long, 4>> rank2_automorphisms(const grext::EmbeddedLattice& L, long B);

struct OrbitCount {
  std::size_t cocycles = 0;
  std::size_t pointed = 0;
  std::size_t free = 0;
};

/// Edge labelings satisfying φ_ab φ_bc = φ_ac, modulo the vertex gauge
/// φ_ij ↦ e_i φ_ij e_j⁻¹, by union-find. nullopt past `budget` cocycles.
std::optional<OrbitCount> cech_orbits(const grext::Nerve& X, const grext::FiniteGroup& H,
                                      std::size_t budget);

/// Same counts by Burnside's lemma over the gauge group; no budget needed.
OrbitCount cech_orbits_burnside(const grext::Nerve& X, const grext::FiniteGroup& H);

/// Number of edge labelings satisfying the cocycle condition, without storing them.
std::size_t cech_cocycle_count(const grext::Nerve& X, const grext::FiniteGroup& H);

/// |ker δ² / im δ¹| for Z_m cochains, counted by enumeration.
std::size_t h2_order_cochains(const grext::Nerve& X, long m);

}  // namespace oracle
