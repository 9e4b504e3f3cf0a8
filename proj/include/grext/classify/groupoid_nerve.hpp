#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grext/classify/fpgroup.hpp"
#include "grext/grpd/finite_group.hpp"

namespace grext {

/// Left action of a finite group on {0, ..., size-1}: action[g][x] = g.x.
struct FiniteAction {
  FiniteGroup group;
  std::size_t size = 1;
  std::vector<std::vector<int>> action;

  static FiniteAction point(const FiniteGroup& g);
  /// Left multiplication on the group itself.
  static FiniteAction regular(const FiniteGroup& g);
};

/// Error: NotAnAction.
void validate_action(const FiniteAction& A);

struct ComponentReport {
  int basepoint = 0;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  FPGroup pi1;                          ///< simplified edge-path presentation
  std::string abelianization;
  std::optional<std::size_t> order;     ///< coset enumeration
  bool abelian_match = false;           ///< abelianization agrees with the stabilizer's
  bool isomorphism_certified = false;   ///< explicit map onto the stabilizer
  std::string certificate;
};

struct GroupoidNerveReport {
  std::string group;
  std::size_t set_size = 0;
  /// Simplices of the nerve of G⋉T in dimensions 0..3: all and nondegenerate.
  std::vector<std::size_t> simplices;
  std::vector<std::size_t> nondegenerate;
  std::vector<ComponentReport> components;
};

/// π₁ of each component of the action groupoid nerve, certified against the
/// stabilizer by an explicit isomorphism when |G| ≤ 24.
GroupoidNerveReport groupoid_nerve(const FiniteAction& A);

}  // namespace grext
