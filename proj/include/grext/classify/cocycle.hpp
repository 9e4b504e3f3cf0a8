#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grext/classify/fpgroup.hpp"
#include "grext/densegroup/automorphism.hpp"
#include "grext/grpd/finite_group.hpp"

namespace grext {

/// Element encoding depends on the kind: {index} for a finite table,
/// reduced coordinates for a f.g. abelian group, the entries of T for Aut(ρ).
using CoeffElement = std::vector<Integer>;

class CoefficientGroup {
 public:
  enum class Kind { FiniteTable, FgAbelian, AutRho };

  static CoefficientGroup finite(FiniteGroup g);
  static CoefficientGroup abelian(AbelianInvariants inv);
  static CoefficientGroup aut_rho(const GroupDescriptor& aut, std::size_t rank);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const { return abelian_; }
  const FiniteGroup& table() const { return finite_; }

  CoeffElement identity() const;
  CoeffElement mul(const CoeffElement& a, const CoeffElement& b) const;
  CoeffElement inv(const CoeffElement& a) const;
  /// Throws NotAnElement when `a` is not in canonical form.
  void validate(const CoeffElement& a) const;
  std::string element_string(const CoeffElement& a) const;

  CoeffElement from_index(int i) const { return {Integer(i)}; }
  int index(const CoeffElement& a) const { return static_cast<int>(a[0].get_si()); }
  /// Element of Aut(ρ) as a coefficient.
  CoeffElement from_matrix(const IntegerMatrix& T) const;
  IntegerMatrix matrix(const CoeffElement& a) const;

  /// Is there h with h·a_i·h⁻¹ = b_i for all i? Error: UndecidableCoefficients.
  bool simultaneously_conjugate(const std::vector<CoeffElement>& a, const std::vector<CoeffElement>& b) const;

 private:
  Kind kind_ = Kind::FiniteTable;
  std::string name_;
  bool abelian_ = false;
  FiniteGroup finite_;
  AbelianInvariants inv_;
  std::size_t rank_ = 0;
};

/// Constant transition labels φ_ij on the edges of a nerve; φ_ji = φ_ij⁻¹.
struct Cocycle {
  Nerve nerve;
  std::shared_ptr<const CoefficientGroup> group;
  std::vector<CoeffElement> labels;  ///< per edge (a, b), a < b: φ_ab

  /// φ_ij for any ordered pair of adjacent (or equal) vertices.
  CoeffElement label(int i, int j) const;
};

Cocycle make_cocycle(const Nerve& X, std::shared_ptr<const CoefficientGroup> G, std::vector<CoeffElement> labels);
Cocycle trivial_cocycle(const Nerve& X, std::shared_ptr<const CoefficientGroup> G);

struct CocycleReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Unit, inverse and triangle relations.
CocycleReport check_cocycle(const Cocycle& c);

/// φ_ij ↦ φ_i φ_ij φ_j⁻¹; chain0 is indexed like nerve.vertices().
Cocycle apply_coboundary(const Cocycle& c, const std::vector<CoeffElement>& chain0);

struct Holonomy {
  EdgePathPresentation presentation;
  std::vector<CoeffElement> images;  ///< one per generator
};

/// Error: RelatorNotKilled.
Holonomy holonomy(const Cocycle& c);

/// Pointed: equal holonomy. Free: simultaneously conjugate holonomy.
bool cohomologous(const Cocycle& a, const Cocycle& b, bool pointed);

/// Vertex map X' → X. Errors: NotSimplicial, UnknownVertex.
Cocycle pullback_cocycle(const Nerve& source, const std::map<int, int>& f, const Cocycle& c);

}  // namespace grext
