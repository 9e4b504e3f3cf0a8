#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "grext/exactnum/integer_matrix.hpp"

namespace grext {

using Edge = std::pair<int, int>;        ///< stored with first < second
using Triangle = std::array<int, 3>;     ///< stored increasing
using Tetrahedron = std::array<int, 4>;  ///< stored increasing

/// Finite nerve of a good cover, up to dimension 3.
class Nerve {
 public:
  const std::string& name() const { return name_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Tetrahedron>& tetrahedra() const { return tetrahedra_; }
  int basepoint() const { return basepoint_; }

  std::size_t vertex_index(int v) const;
  /// Index of the edge {a, b}, or -1.
  long edge_index(int a, int b) const;
  bool has_triangle(const Triangle& t) const;
  /// Sorted neighbours of vertex v.
  std::vector<int> neighbours(int v) const;
  long euler_characteristic() const;

  friend Nerve make_nerve(std::string name, std::vector<int> vertices, std::vector<Edge> edges,
                          std::vector<Triangle> triangles, int basepoint,
                          std::vector<Tetrahedron> tetrahedra);

 private:
  std::string name_;
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<Tetrahedron> tetrahedra_;
  int basepoint_ = 0;
};

/// Validates and canonicalizes. Errors: MissingEdgeOfTriangle,
/// MissingFaceOfTetrahedron, DisconnectedSkeleton, UnknownVertex, BadSimplex,
/// BadBasepoint.
Nerve make_nerve(std::string name, std::vector<int> vertices, std::vector<Edge> edges,
                 std::vector<Triangle> triangles, int basepoint,
                 std::vector<Tetrahedron> tetrahedra = {});

/// circle (3 vertices), circle6 (6 vertices), sphere (tetrahedron boundary),
/// torus (7-vertex triangulation), point. Error: UnknownPreset.
Nerve nerve_preset(const std::string& name);
std::vector<std::string> nerve_preset_names();

/// Boundary ∂_k : C_k → C_{k-1} as an integer matrix (rows = (k-1)-simplices).
IntegerMatrix boundary_matrix(const Nerve& X, int k);

/// Integral homology H_k.
AbelianInvariants simplicial_homology(const Nerve& X, int k);
/// H^k(X; Z_m) by universal coefficients; m = 0 means Z.
AbelianInvariants simplicial_cohomology(const Nerve& X, int k, long m);

}  // namespace grext
