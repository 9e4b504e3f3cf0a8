#pragma once

#include <string>
#include <vector>

#include "grext/densegroup/automorphism.hpp"

namespace grext {

/// Built-in descriptors of the Lie group G: R, R^k, SU2, SU2xR.
struct LieDescriptor {
  std::string name;
  bool contractible = false;
  /// π_k(G) for k = 0, 1, ...
  std::vector<std::string> pi;
};

/// "R" means R^dim. Error: UnknownGDescriptor.
LieDescriptor lie_descriptor(const std::string& name, std::size_t dim);

struct SequenceNode {
  std::string lhs;  ///< term of the homotopy sequence
  std::string rhs;  ///< term it maps to
  bool ok = true;
};

struct HomotopyTable {
  std::string g;
  std::vector<std::string> classifying;  ///< π_i(X) for i = 1..max
  std::vector<std::string> groupoid;     ///< π_i(B(Γ⋉G)) for i = 1..max
  std::vector<SequenceNode> sequence;    ///< 0 → π₂(X) → Γ → π₁(B𝒢) → π₁(X) → 1 against Γ₀, Γ, Aut, Out
  bool sequence_exact = true;
  std::vector<std::string> flags;
};

/// Error: UnsupportedDegree beyond the built-in tables.
HomotopyTable homotopy_groups(const OutRhoReport& out, std::size_t rank, const LieDescriptor& G,
                              int max_degree);

struct PostnikovReport {
  std::string g;
  std::string stage1;
  std::string stage2;
  std::string projection_fiber;
  std::string summary;
  bool split = false;
  std::vector<std::string> flags;
};

/// `discrete_center` selects the product splitting of the second stage.
PostnikovReport postnikov_report(const OutRhoReport& out, std::size_t rank, const LieDescriptor& G,
                                 bool discrete_center);

/// ρ(Γ₀) discrete: N = n and the basis is independent over R.
bool center_is_discrete(const EmbeddedLattice& L);

}  // namespace grext
