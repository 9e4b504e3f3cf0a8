#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grext/densegroup/lattice.hpp"
#include "grext/densegroup/search.hpp"
#include "grext/error.hpp"

namespace grext {

/// Automorphism α of Γ extending to the linear map ᾱ = extension of Rⁿ.
/// T is the action on generators: M·v_j = Σ_i T(i,j)·v_i.
struct AutRhoElement {
  FieldMatrix extension;
  IntegerMatrix T;

  bool is_scalar() const { return extension.size() == 1; }
  const FieldElement& scalar() const { return extension(0, 0); }
  friend bool operator==(const AutRhoElement& a, const AutRhoElement& b) {
    return a.T == b.T && a.extension == b.extension;
  }
};

AutRhoElement aut_identity(const EmbeddedLattice& L);
AutRhoElement aut_compose(const AutRhoElement& a, const AutRhoElement& b);
AutRhoElement aut_inverse(const AutRhoElement& a);
AutRhoElement aut_power(const AutRhoElement& a, long e);

struct GroupDescriptor {
  std::string name;
  std::vector<AutRhoElement> generators;
  bool complete = false;
  /// Set when the group is abelian with known invariants.
  std::optional<AbelianInvariants> invariants;
  /// Free-form qualification, e.g. the search bound used.
  std::string note;
};

/// Z-basis of {λ : λΓ ⊆ Γ} (n = 1).
struct MultiplierOrder {
  NumberField field = NumberField::rationals();
  std::vector<FieldElement> basis;
  std::size_t rank() const { return basis.size(); }
};

/// Raised by unit_group for orders of rank ≥ 3; carries what was verified.
class DegreeUnsupportedError : public Error {
 public:
  DegreeUnsupportedError(std::string witness, GroupDescriptor partial)
      : Error("DegreeUnsupported", std::move(witness)), partial_(std::move(partial)) {}
  const GroupDescriptor& partial() const { return partial_; }

 private:
  GroupDescriptor partial_;
};

MultiplierOrder multiplier_ring(const EmbeddedLattice& L);
bool order_contains(const MultiplierOrder& O, const FieldElement& x);

/// Unit group of an order of rank 1 or 2. The lattice is used to express
/// the units as automorphisms.
GroupDescriptor unit_group(const MultiplierOrder& O, const EmbeddedLattice& L);

/// Certificate that M preserves Γ, with its matrix T.
AutRhoElement is_automorphism(const EmbeddedLattice& L, const FieldMatrix& M);
inline AutRhoElement is_automorphism(const EmbeddedLattice& L, const FieldElement& lambda) {
  return is_automorphism(L, FieldMatrix(1, {lambda}));
}
/// Re-checks ρ(Tγ) = ᾱ(ρ(γ)) on basis vectors and their sum.
bool check_equivariance(const EmbeddedLattice& L, const AutRhoElement& a);

IntegerMatrix malcev_lift(const EmbeddedLattice& L, const AutRhoElement& a);

struct SearchOptions {
  long bound = 5;
  bool parallel = true;
};

/// Aut(ρ). Complete for n = 1 when the multiplier order has rank ≤ 2;
/// otherwise a bounded-search subgroup.
GroupDescriptor aut_rho(const EmbeddedLattice& L, const SearchOptions& opt = {});
/// Verified generators of the subgroup found by bounded search.
GroupDescriptor bounded_search_descriptor(const EmbeddedLattice& L, const SearchOptions& opt);

struct OutRhoReport {
  GroupDescriptor out;
  GroupDescriptor inner;
  GroupDescriptor center;
};
OutRhoReport out_rho(const EmbeddedLattice& L, const SearchOptions& opt = {});

struct ProductAutReport {
  EmbeddedLattice doubled;
  GroupDescriptor group;
  AutRhoElement swap;
};
ProductAutReport product_aut(const EmbeddedLattice& L, const SearchOptions& opt = {});

/// Display form of T as nested rows.
std::string matrix_string(const IntegerMatrix& T);

}  // namespace grext
