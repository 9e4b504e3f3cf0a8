#include "grext/grpd/sampling.hpp"

namespace grext {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

std::vector<Integer> random_gamma(std::mt19937_64& rng, std::size_t N, const SamplingRanges& r) {
  std::vector<Integer> g(N);
  for (auto& z : g) z = uniform(rng, -r.gamma, r.gamma);
  return g;
}

FieldVector random_point(std::mt19937_64& rng, const EmbeddedLattice& L, const SamplingRanges& r) {
  const auto d = static_cast<std::size_t>(L.field().degree());
  FieldVector v;
  for (std::size_t i = 0; i < L.ambient_dim(); ++i) {
    std::vector<Rational> c(d);
    for (auto& q : c) {
      q = Rational(uniform(rng, -r.numerator, r.numerator), uniform(rng, 1, r.denominator));
      q.canonicalize();
    }
    v.emplace_back(L.field(), c);
  }
  return v;
}

std::vector<AutRhoElement> with_inverses(const std::vector<AutRhoElement>& gens) {
  std::vector<AutRhoElement> out = gens;
  for (const auto& g : gens) out.push_back(aut_inverse(g));
  return out;
}

AutRhoElement random_aut(std::mt19937_64& rng, const EmbeddedLattice& L,
                         const std::vector<AutRhoElement>& gens, const SamplingRanges& r) {
  AutRhoElement acc = aut_identity(L);
  if (gens.empty()) return acc;
  const long len = uniform(rng, 0, r.word_length);
  for (long k = 0; k < len; ++k) {
    const auto& g = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
    acc = aut_compose(acc, g);
  }
  return acc;
}

AutGroupoidElement random_aut_pair(std::mt19937_64& rng, const EmbeddedLattice& L,
                                   const std::vector<AutRhoElement>& gens, const SamplingRanges& r) {
  AutRhoElement a = random_aut(rng, L, gens, r);
  return {a, random_point(rng, L, r)};
}

}  // namespace grext
