#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grext/densegroup/automorphism.hpp"
#include "grext/grpd/finite_group.hpp"

namespace grext {

struct SequenceArrow {
  std::string name;
  std::size_t checks = 0;
  bool ok = true;
  std::string detail;
};

struct SequenceReport {
  std::string id;
  std::string sequence;
  std::vector<SequenceArrow> arrows;
  std::string conclusion;
  std::vector<std::string> flags;

  bool exact() const {
    for (const auto& a : arrows) if (!a.ok) return false;
    return true;
  }
};

/// Sequence ids: inner-outer, center-inner, mu-outer, quotient-lemma,
/// discrete-center. Numbered aliases are listed by sequence_ids().
const std::vector<std::pair<std::string, std::string>>& sequence_ids();
std::string canonical_sequence_id(const std::string& id);

/// 1 → K/K₀ → A/K₀ → A/K → 1 by exhaustive coset enumeration.
SequenceReport quotient_lemma_check(const FiniteGroup& A, const std::vector<int>& K,
                                    const std::vector<int>& K0, const std::string& label);

SequenceReport exact_sequence_verify(const std::string& id, const EmbeddedLattice& L,
                                     const GroupDescriptor& aut, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace grext
