#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grext/grpd/groupoid.hpp"

namespace grext {

/// Independent generator for sample `index` of a run seeded with `seed`,
/// so results do not depend on how samples are split across threads.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct SamplingRanges {
  long gamma = 6;       ///< |γ_i| ≤ gamma
  long numerator = 12;  ///< rational coordinates num/den with |num| ≤ numerator
  long denominator = 4; ///< 1 ≤ den ≤ denominator
  int word_length = 8;  ///< automorphism words of length ≤ word_length
};

std::vector<Integer> random_gamma(std::mt19937_64& rng, std::size_t N, const SamplingRanges& r);
FieldVector random_point(std::mt19937_64& rng, const EmbeddedLattice& L, const SamplingRanges& r);
std::vector<AutRhoElement> with_inverses(const std::vector<AutRhoElement>& gens);
/// Random word over `letters` (pass with_inverses(gens) for a symmetric set).
AutRhoElement random_aut(std::mt19937_64& rng, const EmbeddedLattice& L,
                         const std::vector<AutRhoElement>& letters, const SamplingRanges& r);
AutGroupoidElement random_aut_pair(std::mt19937_64& rng, const EmbeddedLattice& L,
                                   const std::vector<AutRhoElement>& letters, const SamplingRanges& r);

}  // namespace grext
