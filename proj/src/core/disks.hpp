#pragma once

#include <array>
#include <optional>

#include "core/jet.hpp"

namespace sr {

/// Closed disk {|zeta - center| <= radius}. Radius 0 in rigid cases.
struct Disk {
  cplx center;
  double radius = 0.0;
};

enum class Feasibility { interior, rigid_at_lambda, rigid_at_mu, rigid_at_tau, infeasible };

/// Interpolation problem at a general point: f in H0 (self-map, f(0)=0),
/// f(z0) = w0, optionally prescribed f'(z0), f''(z0), f'''(z0).
struct GeneralInstance {
  cplx z0;
  cplx w0;
  std::optional<cplx> w1, w2, w3;
  double r = 0.0, s = 0.0;  // |z0|, |w0|
  double phi = 0.0;         // arg z0
  double xi = 0.0;          // arg w0 (0 when w0 = 0)
};

/// Validates 0 < |z0| < 1 and |w0| < |z0|, fills the derived fields.
GeneralInstance make_general(cplx z0, cplx w0, std::optional<cplx> w1 = {},
                             std::optional<cplx> w2 = {}, std::optional<cplx> w3 = {});

/// Problem rotated onto the real axis: z0 = r > 0, w0 = s >= 0, with
/// parameters lambda, mu, tau in the closed disk. `levels` records how many
/// of them are data-backed (3 when constructed from explicit parameters).
struct CanonicalInstance {
  double r = 0.0, s = 0.0;
  cplx lambda{}, mu{}, tau{};
  Feasibility feasibility = Feasibility::interior;
  int levels = 3;
};

/// Validates s < r, clamps parameters with |.| in (1, 1+1e-12] onto the
/// circle, classifies feasibility. |.| > 1+1e-12 marks the instance
/// infeasible.
CanonicalInstance make_canonical(double r, double s, cplx lambda, cplx mu, cplx tau);

/// Unimodular factors e^{i(n phi - xi)}, n = 0..4, transforming derivative
/// data into the canonical frame: w~_n = factor[n] * w_n.
struct RotationFactors {
  std::array<cplx, 5> by_order;
};

struct RotationReduction {
  double r = 0.0, s = 0.0;
  RotationFactors factors;
};

RotationReduction rotation_reduce(const GeneralInstance& inst);

/// Total evaluation of the order-k disk (k = 1..4); no rigidity policing
/// beyond parameter moduli <= 1. Canonical (real-axis) displays.
Disk evaluate_disk_canonical(int k, double r, double s, cplx lambda, cplx mu, cplx tau);

/// Same, through the general-z0 displays. Parameters are general-frame.
Disk evaluate_disk_general(int k, cplx z0, cplx w0, cplx lambda, cplx mu, cplx tau);

/// Spec contract on top of the canonical displays: errors when a parameter
/// below the top level for order k is unimodular (the disk degenerates
/// through no fault of order k), or when the instance lacks the data.
Disk disk_order(int k, const CanonicalInstance& inst);

/// Same contract through the general displays with general-frame parameters.
Disk disk_order_general(int k, const GeneralInstance& inst, cplx lambda, cplx mu, cplx tau);

/// Parameter recovery: general-frame betas from the affine premise lines plus
/// the canonical reduction (lambda = e^{-i xi} b1, mu = e^{i(phi-xi)} b2,
/// tau = e^{i(2 phi - xi)} b3).
struct Inversion {
  CanonicalInstance canonical;
  std::array<cplx, 3> general{};  // beta1..beta3, zero where not inferable
};

Inversion invert_full(const GeneralInstance& inst);
CanonicalInstance invert_parameters(const GeneralInstance& inst);

/// Values of f(z) over f in H0 with f'(0) = d0 fixed, z != 0.
Disk rogosinski_disk(cplx z, cplx d0);

}  // namespace sr
