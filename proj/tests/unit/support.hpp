#pragma once

#include <random>
#include <string>

#include "grext/cli/problem.hpp"
#include "grext/densegroup/lattice.hpp"
#include "grext/error.hpp"
#include "grext/exactnum/number_field.hpp"

namespace test {

inline grext::EmbeddedLattice preset_lattice(const std::string& name) {
  return grext::problem_lattice(grext::parse_problem(grext::problem_preset(name)));
}

inline grext::FieldElement random_element(std::mt19937_64& rng, const grext::NumberField& f, long range = 9) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 4);
  std::vector<grext::Rational> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(grext::make_rational(num(rng), den(rng)));
  return grext::FieldElement(f, c);
}

/// Name of the grext::Error thrown by fn, or "" if none.
template <class F>
std::string error_name(F&& fn) {
  try {
    fn();
  } catch (const grext::Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace test
