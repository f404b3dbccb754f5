#include "core/peschl.hpp"

#include <cmath>

namespace sr {

namespace {

void validate(const Jet& g, cplx z) {
  if (g.order() < 4) fail(errc::invalid_order, "jet order must be >= 4");
  if (g.center() != z) fail(errc::center_mismatch, "jet is not centered at z");
  if (std::abs(z) >= 1.0) fail(errc::invalid_argument, "need |z| < 1");
  if (std::abs(g.value()) >= 1.0) fail(errc::not_a_self_map, "need |g(z)| < 1");
}

}  // namespace

PeschlDerivatives peschl_derivatives(const Jet& g, cplx z) {
  validate(g, z);
  cplx gv = g.value();
  cplx g1 = jet_derivative(g, 1);
  cplx g2 = jet_derivative(g, 2);
  cplx g3 = jet_derivative(g, 3);
  cplx g4 = jet_derivative(g, 4);
  double az = 1.0 - std::norm(z);
  double ag = 1.0 - std::norm(gv);
  cplx zb = std::conj(z);
  cplx gb = std::conj(gv);

  PeschlDerivatives p;
  p.at = z;
  p.value = gv;
  p.d1 = az * g1 / ag;
  p.d2 = az * az / ag * (g2 - 2.0 * zb * g1 / az + 2.0 * gb * g1 * g1 / ag);
  p.d3 = az * az * az / ag *
         (g3 - 6.0 * zb * g2 / az + 6.0 * gb * g1 * g2 / ag + 6.0 * zb * zb * g1 / (az * az) -
          12.0 * zb * gb * g1 * g1 / (az * ag) + 6.0 * gb * gb * g1 * g1 * g1 / (ag * ag));
  p.d4 = az * az * az * az / ag *
         (g4 - 12.0 * zb * g3 / az + 6.0 * gb * g2 * g2 / ag + 36.0 * zb * zb * g2 / (az * az) +
          24.0 * gb * gb * gb * g1 * g1 * g1 * g1 / (ag * ag * ag) -
          72.0 * zb * gb * gb * g1 * g1 * g1 / (az * ag * ag) +
          72.0 * zb * zb * gb * g1 * g1 / (az * az * ag) -
          24.0 * zb * zb * zb * g1 / (az * az * az) + 8.0 * gb * g1 * g3 / ag +
          36.0 * gb * gb * g1 * g1 * g2 / (ag * ag) - 72.0 * zb * gb * g1 * g2 / (az * ag));
  return p;
}

PeschlDerivatives peschl_derivatives_reference(const Jet& g, cplx z) {
  validate(g, z);
  int order = g.order();
  // Jet of T_z at 0, then h = T_{-g(z)} o g o T_z read off at 0.
  Jet inner = mobius_apply(z, Jet::variable(cplx(0.0), order));
  Jet h = mobius_apply(-g.value(), jet_compose(g, inner));

  PeschlDerivatives p;
  p.at = z;
  p.value = g.value();
  p.d1 = jet_derivative(h, 1);
  p.d2 = jet_derivative(h, 2);
  p.d3 = jet_derivative(h, 3);
  p.d4 = jet_derivative(h, 4);
  return p;
}

ChoSides cho_inequality(const PeschlDerivatives& p) {
  double a = 1.0 - std::norm(p.d1);
  cplx h2 = p.d2 / 2.0;
  cplx h3 = p.d3 / 6.0;
  cplx d1b = std::conj(p.d1);
  cplx lhs = p.d4 / 24.0 * (a * a - std::norm(h2)) + 2.0 * d1b * h2 * h3 * a +
             d1b * d1b * h2 * h2 * h2 + std::conj(h2) * h3 * h3;
  double rhs = a * a * a - a * (std::norm(h3) + 2.0 * std::norm(h2)) +
               std::norm(h2) * std::norm(h2) -
               2.0 * std::real(p.d1 * std::conj(h2) * std::conj(h2) * h3);
  return {std::abs(lhs), rhs};
}

}  // namespace sr
