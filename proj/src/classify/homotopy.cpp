#include "grext/classify/homotopy.hpp"

namespace grext {

namespace {

// π_k(S³) for k = 0..9.
const std::vector<std::string> kSphere3 = {"0", "0", "0", "Z", "Z_2", "Z_2", "Z_12", "Z_2", "Z_2", "Z_3"};

std::string group_or_zero(const std::string& name) { return name == "trivial" ? "0" : name; }

}  // namespace

LieDescriptor lie_descriptor(const std::string& name, std::size_t dim) {
  LieDescriptor d;
  if (name == "R" || name.rfind("R^", 0) == 0) {
    std::size_t k = dim;
    if (name != "R") {
      try {
        k = std::stoul(name.substr(2));
      } catch (const std::exception&) {
        fail("UnknownGDescriptor", name);
      }
    }
    d.name = k == 1 ? "R" : "R^" + std::to_string(k);
    d.contractible = true;
    d.pi.assign(kSphere3.size(), "0");
    return d;
  }
  if (name == "SU2" || name == "SU2xR") {
    d.name = name;
    d.pi = kSphere3;
    return d;
  }
  fail("UnknownGDescriptor", name);
}

HomotopyTable homotopy_groups(const OutRhoReport& out, std::size_t rank, const LieDescriptor& G, int max_degree) {
  if (max_degree < 1) fail("UnsupportedDegree", std::to_string(max_degree));
  if (static_cast<std::size_t>(max_degree) > G.pi.size()) {
    fail("UnsupportedDegree", "tables stop at degree " + std::to_string(G.pi.size()));
  }
  HomotopyTable t;
  t.g = G.name;
  const std::string gamma = AbelianInvariants{{}, rank}.name();
  const std::string center = group_or_zero(out.center.name);
  const std::string outname = group_or_zero(out.out.name);
  for (int i = 1; i <= max_degree; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    // π_i(BG) = π_{i-1}(G); π₂(BG) = π₁(G) = 0 for the built-in groups.
    if (i == 1) {
      t.classifying.push_back(outname);
      t.groupoid.push_back(gamma);
    } else {
      t.classifying.push_back(i == 2 ? center : G.pi[k - 1]);
      t.groupoid.push_back(G.pi[k]);
    }
  }
  // The homotopy sequence of B𝒢 → X with fibre B(Γ⋉G), term by term.
  const std::string aut = group_or_zero(out.out.name);
  const std::string inner = group_or_zero(out.inner.name);
  t.sequence = {
      {"π₂(X) = " + center, "Γ₀ = " + center, center == gamma},
      {"Γ = " + gamma, "Γ = " + gamma, true},
      {"π₁(B𝒢) = " + aut, "Aut(ρ) = " + aut, true},
      {"π₁(X) = " + outname, "Out(ρ) = " + outname, true},
      {"ker(Γ → Aut(ρ)) = " + gamma, "image of Γ₀ = " + center, center == gamma && inner == "0"},
      {"image(Γ → Aut(ρ)) = " + inner, "ker(Aut(ρ) → Out(ρ)) = " + inner, inner == "0" && aut == outname},
  };
  for (const auto& n : t.sequence) t.sequence_exact = t.sequence_exact && n.ok;
  t.flags.push_back(
      "the universal base as BAut(Γ⋉G)_* would give π₁ = π₀(Aut(Γ⋉G)) = Aut(ρ); the table uses π₁ = Out(ρ). "
      "They agree here because Int(ρ) = " + inner);
  return t;
}

PostnikovReport postnikov_report(const OutRhoReport& out, std::size_t rank, const LieDescriptor& G,
                                 bool discrete_center) {
  PostnikovReport r;
  r.g = G.name;
  const std::string center = AbelianInvariants{{}, rank}.name();
  r.stage1 = "K(" + out.out.name + ",1)";
  r.split = discrete_center;
  r.stage2 = discrete_center ? "K(" + out.out.name + ",1) × K(" + center + ",2)"
                             : "fiber K(" + center + ",2) over " + r.stage1;
  if (G.contractible) {
    r.projection_fiber = "BG ≃ *";
    r.summary = discrete_center ? "X = X_(2) = " + r.stage2 : "X = X_(2): " + r.stage2;
    r.flags.push_back("X = X_(2)");
  } else {
    r.projection_fiber = "BSU2";
    r.summary = "X_(3) = X_(2): " + r.stage2 + "; X → X_(2) has fiber BSU2";
    r.flags.push_back("X_(3) = X_(2)");
  }
  return r;
}

bool center_is_discrete(const EmbeddedLattice& L) {
  if (L.rank() != L.ambient_dim()) return false;
  return !FieldMatrix::from_columns(L.basis()).determinant().is_zero();
}

}  // namespace grext
