#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grext/densegroup/automorphism.hpp"

namespace grext {

struct SuiteCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  bool ok() const {
    for (const auto& c : checks) if (c.failures) return false;
    return true;
  }
};

/// Sampled identities of Γ⋉G, Aut(ρ)⋉G, ψ, μ and the crossed modules.
SuiteReport run_grpd_suite(const EmbeddedLattice& L, const GroupDescriptor& aut, std::size_t samples,
                           std::uint64_t seed, bool parallel = true);

/// Every exact sequence; inapplicable ones are listed with zero samples.
SuiteReport run_sequence_suite(const EmbeddedLattice& L, const GroupDescriptor& aut, std::size_t samples,
                               std::uint64_t seed);

}  // namespace grext
