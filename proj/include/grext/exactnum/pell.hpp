#pragma once

#include <cstddef>

#include "grext/exactnum/rational.hpp"

namespace grext {

/// x² − D·y² = norm with x + y√D > 1 minimal.
struct PellSolution {
  Integer D;
  Integer x;
  Integer y;
  int norm = 1;
  std::size_t period = 0;
};

/// Fundamental solution from the continued fraction of √D.
PellSolution pell_fundamental_unit(const Integer& D);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Fundamental unit of the quadratic order Z[η], η² = t·η − n, with
/// discriminant Δ = t² − 4n > 0 nonsquare. The unit is (x + y√Δ)/2 with
/// x ≡ t·y (mod 2); norm = (x² − Δy²)/4.
struct QuadraticUnit {
  Integer discriminant;
  Integer x;
  Integer y;
  int norm = 1;
  std::size_t period = 0;
};

QuadraticUnit quadratic_order_unit(const Integer& t, const Integer& n);

}  // namespace grext
