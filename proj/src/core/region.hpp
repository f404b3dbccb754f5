#pragma once

#include <vector>

#include "core/disks.hpp"
#include "core/geometry.hpp"

namespace sr {

/// Affine frame in which the free-tau region of f''''(r) becomes
/// A(B + C V), V = union over |zeta|<=1 of disks with center
/// c(zeta) = zeta(1 - eta zeta) and radius rho(zeta) = t(1 - |zeta|^2).
/// K = 1 + 2r^2 - 2 s lambda - 2 r conj(lambda) mu is the shared denominator.
struct EnvelopeFrame {
  double r = 0.0, s = 0.0;
  cplx lambda{}, mu{};
  cplx K{};
  double A = 0.0;
  cplx B{}, C{};
  cplx eta{};
  double t = 0.0;
};

EnvelopeFrame envelope_frame(double r, double s, cplx lambda, cplx mu);

cplx envelope_center(const EnvelopeFrame& f, cplx zeta);    // c(zeta)
double envelope_radius(const EnvelopeFrame& f, cplx zeta);  // rho(zeta)

/// Root x > |eta| of |x e^{i theta} - conj(eta)| = 2(x^2 - |eta|^2),
/// bracketed in (|eta|, |eta| + 1]; residual <= 1e-12.
double solve_t_theta(cplx eta, double theta);

enum class BoundaryTag { envelope, disk_point };

struct BoundaryPoint {
  double theta = 0.0;
  cplx gamma{};
  cplx zeta{};
  double t_theta = 0.0;
  BoundaryTag tag = BoundaryTag::envelope;
};

/// Per-angle rule: when |t e^{i theta} - conj(eta)| >= 2(t^2 - |eta|^2) the
/// support point comes from a single disk (|zeta_theta| = 1, tag disk_point,
/// t_theta solved); otherwise from the envelope (tag envelope, t_theta = t).
/// Ties take the disk branch; both branches coincide there.
BoundaryPoint boundary_point(const EnvelopeFrame& frame, double theta);

struct RegionBoundary {
  EnvelopeFrame frame;
  std::vector<BoundaryPoint> points;  // strictly increasing theta in (-pi, pi]
  bool closed = true;
};

/// n uniform angles theta_j = -pi + 2 pi (j+1)/n; fails on a convexity defect
/// above 1e-9 (logic-bug sentinel, the region is provably convex).
RegionBoundary trace_boundary(const EnvelopeFrame& frame, int n);

double convexity_defect(const RegionBoundary& boundary);

/// Direct sampling of the region: tau on a polar grid of the closed disk
/// (resolution radii x resolution angles) and alpha on 2*resolution circle
/// angles; returns the convex hull of c4 + rho4 * alpha.
struct RegionHull {
  std::vector<cplx> hull;  // counterclockwise vertices
  double diameter = 0.0;
};

RegionHull brute_force_region(double r, double s, cplx lambda, cplx mu, int resolution);

}  // namespace sr
