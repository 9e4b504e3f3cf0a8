#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grext/classify/nerve.hpp"
#include "grext/densegroup/lattice.hpp"

namespace grext {

/// Parsed problem document. Rationals are kept as normalized "p/q" strings.
struct ProblemDocument {
  std::vector<Integer> min_poly;                     ///< ascending degree, monic
  std::array<std::string, 2> root_interval;
  std::size_t ambient_dim = 1;
  std::vector<std::vector<std::string>> lattice_basis;  ///< per vector, per coordinate: "c0,c1,..."
  std::optional<std::array<long, 4>> ga_matrix;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Errors: ParseError (malformed JSON), SchemaError (witness starts with the
/// JSON pointer of the offending value).
ProblemDocument parse_problem(const std::string& text);
/// Canonical JSON text with sorted keys.
std::string problem_to_json(const ProblemDocument& doc);
EmbeddedLattice problem_lattice(const ProblemDocument& doc);

/// Shipped problem documents: lsqrt2, cubic, complex-alpha-sqrt2, carriere-211.
/// Error: UnknownPreset.
const std::string& problem_preset(const std::string& name);
std::vector<std::string> problem_preset_names();

/// {"name", "vertices", "edges", "triangles", "tetrahedra"?, "basepoint"}.
Nerve parse_nerve(const std::string& text);

}  // namespace grext
