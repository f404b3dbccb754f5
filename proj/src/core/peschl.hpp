#pragma once

#include "core/jet.hpp"

namespace sr {

/// Invariant derivatives D1..D4 of a self-map g at an interior point z:
/// the Taylor data (times n!) of the renormalized map
/// h = T_{-g(z)} o g o T_z at 0.
struct PeschlDerivatives {
  cplx d1{}, d2{}, d3{}, d4{};
  cplx at{};     // evaluation point z
  cplx value{};  // g(z)
};

/// Closed-form route: reads g(z)..g''''(z) off the jet and evaluates the
/// displayed invariant-derivative formulas.
PeschlDerivatives peschl_derivatives(const Jet& g, cplx z);

/// Definitional route: builds the jet of h = T_{-g(z)} o g o T_z directly and
/// reads D_n = h^(n)(0). Kept independent of the closed forms for
/// cross-checking.
PeschlDerivatives peschl_derivatives_reference(const Jet& g, cplx z);

struct ChoSides {
  double lhs = 0.0;  // modulus of the complex combination
  double rhs = 0.0;
  bool holds(double tol = 1e-9) const { return lhs <= rhs + tol * std::max(1.0, rhs); }
};

/// Both sides of the degree-4 coefficient inequality. Equality (within
/// rounding) characterizes Blaschke products of degree at most 4.
ChoSides cho_inequality(const PeschlDerivatives& p);

}  // namespace sr
