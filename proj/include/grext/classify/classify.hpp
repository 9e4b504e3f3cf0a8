#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grext/classify/cocycle.hpp"
#include "grext/grpd/crossed_module.hpp"

namespace grext {

inline constexpr std::size_t kDefaultBudget = 1000000;

/// Hom(G, H) as image tuples of G's generators, in lexicographic order.
/// Error: SpecTooLarge when |H|^gens exceeds the budget.
std::vector<std::vector<int>> enumerate_homs_serial(const FPGroup& G, const FiniteGroup& H,
                                                    std::size_t budget = kDefaultBudget);
std::vector<std::vector<int>> enumerate_homs_parallel(const FPGroup& G, const FiniteGroup& H,
                                                      std::size_t budget = kDefaultBudget);

struct FiniteClassification {
  std::string nerve;
  std::string group;
  std::string pi1;            ///< simplified presentation
  std::size_t pointed = 0;    ///< |Hom(π₁, H)|
  std::size_t free = 0;       ///< Hom(π₁, H)/H
};

/// Flat H-bundles on the nerve by holonomy.
FiniteClassification classify_finite(const Nerve& X, const FiniteGroup& H, bool parallel = true,
                                     std::size_t budget = kDefaultBudget);

enum class ClassifyMode { PointedIso, Iso, Equivalence };
ClassifyMode parse_classify_mode(const std::string& s);
std::string mode_name(ClassifyMode m);

struct ClassificationReport {
  std::string mode;
  std::string nerve;
  std::string pi1;
  std::string pi1_abelianization;
  std::string coefficients;
  std::string classes;                ///< parametric descriptor
  std::optional<std::string> count;   ///< decimal, when finite
  std::string base;                   ///< equivalence mode: Hom(π₁, Out(ρ))
  std::string fiber;                  ///< equivalence mode: H²(X; Γ₀)
  bool complete = true;
  std::vector<std::string> flags;
};

ClassificationReport classify_extensions(const GroupDescriptor& aut, std::size_t rank, const Nerve& X,
                                         ClassifyMode mode);

/// Aut(ρ) ≅ ⊕Z_t ⊕ Z^r replaced by the finite quotient ⊕Z_t ⊕ (Z_n)^r.
/// Error: UndecidableCoefficients when Aut(ρ) has no abelian invariants.
FiniteGroup finite_quotient(const GroupDescriptor& aut, int n);

struct CrossedH1Report {
  std::string spec;
  std::string nerve;
  std::size_t cocycles = 0;
  std::size_t classes = 0;
  std::size_t states = 0;
  std::size_t budget = 0;
};

/// Crossed-module cocycles (E on edges, Γ on triangles) modulo gauge.
/// Error: SpecTooLarge.
CrossedH1Report crossed_module_h1(const Nerve& X, const FiniteCrossedModule& spec,
                                  std::size_t budget = kDefaultBudget);

}  // namespace grext
