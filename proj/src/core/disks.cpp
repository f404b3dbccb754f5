#include "core/disks.hpp"

#include <cmath>

namespace sr {

namespace {

constexpr double kFeasTol = 1e-12;   // |.| <= 1 + kFeasTol is feasible (clamped)
constexpr double kUnimodTol = 1e-12; // |.| >= 1 - kUnimodTol counts as rigid
constexpr double kRigidDataTol = 1e-9;

bool unimodular(cplx x) { return std::abs(x) >= 1.0 - kUnimodTol; }

cplx clamp_to_disk(cplx x) {
  double m = std::abs(x);
  return (m > 1.0) ? x / m : x;
}

void check_order(int k) {
  if (k < 1 || k > 4) fail(errc::invalid_argument, "disk order must be 1..4");
}

// Shared rigidity contract for disk_order / disk_order_general.
void check_rigid_levels(int k, cplx lambda, cplx mu) {
  if (k >= 3 && unimodular(lambda))
    fail(errc::rigid_case, "|lambda| = 1 pins every derivative above order 2");
  if (k == 4 && unimodular(mu))
    fail(errc::rigid_case, "|mu| = 1 pins every derivative above order 3");
}

void check_params_feasible(cplx lambda, cplx mu, cplx tau) {
  if (std::abs(lambda) > 1.0 + kFeasTol || std::abs(mu) > 1.0 + kFeasTol ||
      std::abs(tau) > 1.0 + kFeasTol)
    fail(errc::infeasible, "parameter outside the closed unit disk");
}

}  // namespace

GeneralInstance make_general(cplx z0, cplx w0, std::optional<cplx> w1, std::optional<cplx> w2,
                             std::optional<cplx> w3) {
  GeneralInstance g;
  g.z0 = z0;
  g.w0 = w0;
  g.w1 = w1;
  g.w2 = w2;
  g.w3 = w3;
  g.r = std::abs(z0);
  g.s = std::abs(w0);
  if (g.r <= 0.0 || g.r >= 1.0) fail(errc::invalid_instance, "need 0 < |z0| < 1");
  if (g.s >= g.r) fail(errc::invalid_instance, "need |w0| < |z0|");
  g.phi = std::arg(z0);
  g.xi = (g.s == 0.0) ? 0.0 : std::arg(w0);
  return g;
}

CanonicalInstance make_canonical(double r, double s, cplx lambda, cplx mu, cplx tau) {
  if (!(r > 0.0 && r < 1.0)) fail(errc::invalid_instance, "need 0 < r < 1");
  if (!(s >= 0.0 && s < r)) fail(errc::invalid_instance, "need 0 <= s < r");
  CanonicalInstance inst;
  inst.r = r;
  inst.s = s;
  inst.levels = 3;
  if (std::abs(lambda) > 1.0 + kFeasTol || std::abs(mu) > 1.0 + kFeasTol ||
      std::abs(tau) > 1.0 + kFeasTol) {
    inst.lambda = lambda;
    inst.mu = mu;
    inst.tau = tau;
    inst.feasibility = Feasibility::infeasible;
    return inst;
  }
  inst.lambda = clamp_to_disk(lambda);
  inst.mu = clamp_to_disk(mu);
  inst.tau = clamp_to_disk(tau);
  if (unimodular(inst.lambda))
    inst.feasibility = Feasibility::rigid_at_lambda;
  else if (unimodular(inst.mu))
    inst.feasibility = Feasibility::rigid_at_mu;
  else if (unimodular(inst.tau))
    inst.feasibility = Feasibility::rigid_at_tau;
  else
    inst.feasibility = Feasibility::interior;
  return inst;
}

RotationReduction rotation_reduce(const GeneralInstance& inst) {
  RotationReduction red;
  red.r = inst.r;
  red.s = inst.s;
  for (int n = 0; n <= 4; ++n)
    red.factors.by_order[n] = std::polar(1.0, n * inst.phi - inst.xi);
  return red;
}

Disk evaluate_disk_canonical(int k, double r, double s, cplx lambda, cplx mu, cplx tau) {
  check_order(k);
  check_params_feasible(lambda, mu, tau);
  lambda = clamp_to_disk(lambda);
  mu = clamp_to_disk(mu);
  tau = clamp_to_disk(tau);
  double r2 = r * r, s2 = s * s;
  double omr2 = 1.0 - r2;
  // Exactly zero in rigid cases so degenerate radii come out as exactly 0.
  double dl = unimodular(lambda) ? 0.0 : 1.0 - std::norm(lambda);
  double dm = unimodular(mu) ? 0.0 : 1.0 - std::norm(mu);
  double dt = unimodular(tau) ? 0.0 : 1.0 - std::norm(tau);
  cplx cl = std::conj(lambda), cm = std::conj(mu);
  switch (k) {
    case 1:
      return {cplx(s / r), (r2 - s2) / (r * omr2)};
    case 2: {
      cplx c = 2.0 * (r2 - s2) / (r2 * omr2 * omr2) * lambda * (1.0 - s * lambda);
      return {c, 2.0 * (r2 - s2) / (r * omr2 * omr2) * dl};
    }
    case 3: {
      cplx a3 = s2 * lambda * lambda * lambda - s * (1.0 + r2) * lambda * lambda + r2 * lambda;
      cplx c = 6.0 * (r2 - s2) / (r2 * r * omr2 * omr2 * omr2) *
               (a3 + r * mu * dl * (1.0 + r2 - 2.0 * s * lambda - r * cl * mu));
      return {c, 6.0 * (r2 - s2) / (r * omr2 * omr2 * omr2) * dl * dm};
    }
    default: {
      cplx q = -s * lambda * lambda + r2 * lambda + r * mu * dl;
      cplx b = lambda * r2 * r2 * r2 - s2 * s * lambda * lambda * lambda * lambda -
               3.0 * s2 * lambda * lambda * q +
               (1.0 - r2 - 2.0 * s * lambda) *
                   (lambda * (s * lambda - r2) * (s * lambda - r2) +
                    r * mu * dl * (2.0 * r2 - 2.0 * s * lambda - r * cl * mu)) -
               s * q * q +
               r2 * r * dl * (cl * cl * mu * mu * mu + 3.0 * r2 * mu - 3.0 * r * cl * mu * mu);
      double a = 24.0 * (r2 - s2) / (r2 * r2 * omr2 * omr2 * omr2 * omr2);
      cplx c = a * (b + r2 * tau * dl * dm *
                            (1.0 + 2.0 * r2 - 2.0 * s * lambda - 2.0 * r * cl * mu - r * cm * tau));
      return {c, a * r2 * r * dl * dm * dt};
    }
  }
}

Disk evaluate_disk_general(int k, cplx z0, cplx w0, cplx lambda, cplx mu, cplx tau) {
  check_order(k);
  check_params_feasible(lambda, mu, tau);
  lambda = clamp_to_disk(lambda);
  mu = clamp_to_disk(mu);
  tau = clamp_to_disk(tau);
  double r = std::abs(z0), s = std::abs(w0);
  double r2 = r * r, s2 = s * s;
  double omr2 = 1.0 - r2;
  double dl = unimodular(lambda) ? 0.0 : 1.0 - std::norm(lambda);
  double dm = unimodular(mu) ? 0.0 : 1.0 - std::norm(mu);
  double dt = unimodular(tau) ? 0.0 : 1.0 - std::norm(tau);
  cplx cw = std::conj(w0), cz = std::conj(z0);
  cplx cl = std::conj(lambda), cm = std::conj(mu);
  switch (k) {
    case 1:
      return {w0 / z0, (r2 - s2) / (r * omr2)};
    case 2: {
      cplx c = 2.0 * (r2 - s2) / (z0 * z0 * omr2 * omr2) * lambda * (1.0 - cw * lambda);
      return {c, 2.0 * (r2 - s2) / (r * omr2 * omr2) * dl};
    }
    case 3: {
      cplx a3 = cw * cw * lambda * lambda * lambda - cw * (1.0 + r2) * lambda * lambda + r2 * lambda;
      cplx c = 6.0 * (r2 - s2) / (z0 * z0 * z0 * omr2 * omr2 * omr2) *
               (a3 + z0 * mu * dl * (1.0 + r2 - 2.0 * cw * lambda - z0 * cl * mu));
      return {c, 6.0 * (r2 - s2) / (r * omr2 * omr2 * omr2) * dl * dm};
    }
    default: {
      cplx q = -cw * lambda * lambda + r2 * lambda + z0 * mu * dl;
      cplx b = lambda * r2 * r2 * r2 - cw * cw * cw * lambda * lambda * lambda * lambda -
               3.0 * cw * cw * lambda * lambda * q +
               (1.0 - r2 - 2.0 * cw * lambda) *
                   (lambda * (cw * lambda - r2) * (cw * lambda - r2) +
                    z0 * mu * dl * (2.0 * r2 - 2.0 * cw * lambda - z0 * cl * mu)) -
               cw * q * q +
               z0 * z0 * z0 * dl * (cl * cl * mu * mu * mu + 3.0 * cz * cz * mu - 3.0 * cz * cl * mu * mu);
      cplx pref = 24.0 * (r2 - s2) / (z0 * z0 * z0 * z0 * omr2 * omr2 * omr2 * omr2);
      cplx c = pref * (b + z0 * z0 * tau * dl * dm *
                               (1.0 + 2.0 * r2 - 2.0 * cw * lambda - 2.0 * z0 * cl * mu -
                                z0 * cm * tau));
      return {c, 24.0 * (r2 - s2) / (r * omr2 * omr2 * omr2 * omr2) * dl * dm * dt};
    }
  }
}

Disk disk_order(int k, const CanonicalInstance& inst) {
  check_order(k);
  if (inst.feasibility == Feasibility::infeasible)
    fail(errc::infeasible, "instance is infeasible");
  check_rigid_levels(k, inst.lambda, inst.mu);
  if (inst.levels < k - 1) fail(errc::missing_data, "instance lacks data for this order");
  return evaluate_disk_canonical(k, inst.r, inst.s, inst.lambda, inst.mu, inst.tau);
}

Disk disk_order_general(int k, const GeneralInstance& inst, cplx lambda, cplx mu, cplx tau) {
  check_order(k);
  check_params_feasible(lambda, mu, tau);
  check_rigid_levels(k, lambda, mu);
  return evaluate_disk_general(k, inst.z0, inst.w0, lambda, mu, tau);
}

Inversion invert_full(const GeneralInstance& inst) {
  if (!inst.w1) fail(errc::missing_data, "w1 is required to recover lambda");
  if (inst.w3 && !inst.w2) fail(errc::missing_data, "w2 is required before w3");
  cplx z0 = inst.z0, w0 = inst.w0;
  double r = inst.r;

  Inversion out;
  out.canonical.r = r;
  out.canonical.s = inst.s;
  out.canonical.levels = 1 + (inst.w2 ? 1 : 0) + (inst.w3 ? 1 : 0);
  cplx rot1 = std::polar(1.0, -inst.xi);
  cplx rot2 = std::polar(1.0, inst.phi - inst.xi);
  cplx rot3 = std::polar(1.0, 2.0 * inst.phi - inst.xi);

  auto data_matches = [](cplx got, cplx forced) {
    return std::abs(got - forced) <= kRigidDataTol * (1.0 + std::abs(forced));
  };

  Disk d1 = evaluate_disk_general(1, z0, w0, 0.0, 0.0, 0.0);
  cplx b1 = (*inst.w1 - d1.center) * z0 / (d1.radius * r);
  if (std::abs(b1) > 1.0 + kFeasTol) {
    out.general[0] = b1;
    out.canonical.lambda = rot1 * b1;
    out.canonical.feasibility = Feasibility::infeasible;
    return out;
  }
  b1 = clamp_to_disk(b1);
  out.general[0] = b1;
  out.canonical.lambda = rot1 * b1;

  if (unimodular(b1)) {
    b1 /= std::abs(b1);
    out.general[0] = b1;
    out.canonical.lambda = rot1 * b1;
    out.canonical.feasibility = Feasibility::rigid_at_lambda;
    if (inst.w2 &&
        !data_matches(*inst.w2, evaluate_disk_general(2, z0, w0, b1, 0.0, 0.0).center))
      out.canonical.feasibility = Feasibility::infeasible;
    if (inst.w3 &&
        !data_matches(*inst.w3, evaluate_disk_general(3, z0, w0, b1, 0.0, 0.0).center))
      out.canonical.feasibility = Feasibility::infeasible;
    return out;
  }

  if (!inst.w2) {
    out.canonical.feasibility = Feasibility::interior;
    return out;
  }
  Disk d2 = evaluate_disk_general(2, z0, w0, b1, 0.0, 0.0);
  cplx b2 = (*inst.w2 - d2.center) * z0 / (d2.radius * r);
  if (std::abs(b2) > 1.0 + kFeasTol) {
    out.general[1] = b2;
    out.canonical.mu = rot2 * b2;
    out.canonical.feasibility = Feasibility::infeasible;
    return out;
  }
  b2 = clamp_to_disk(b2);
  out.general[1] = b2;
  out.canonical.mu = rot2 * b2;

  if (unimodular(b2)) {
    b2 /= std::abs(b2);
    out.general[1] = b2;
    out.canonical.mu = rot2 * b2;
    out.canonical.feasibility = Feasibility::rigid_at_mu;
    if (inst.w3 &&
        !data_matches(*inst.w3, evaluate_disk_general(3, z0, w0, b1, b2, 0.0).center))
      out.canonical.feasibility = Feasibility::infeasible;
    return out;
  }

  if (!inst.w3) {
    out.canonical.feasibility = Feasibility::interior;
    return out;
  }
  Disk d3 = evaluate_disk_general(3, z0, w0, b1, b2, 0.0);
  cplx b3 = (*inst.w3 - d3.center) * z0 / (d3.radius * r);
  if (std::abs(b3) > 1.0 + kFeasTol) {
    out.general[2] = b3;
    out.canonical.tau = rot3 * b3;
    out.canonical.feasibility = Feasibility::infeasible;
    return out;
  }
  b3 = clamp_to_disk(b3);
  out.general[2] = b3;
  out.canonical.tau = rot3 * b3;
  out.canonical.feasibility =
      unimodular(b3) ? Feasibility::rigid_at_tau : Feasibility::interior;
  return out;
}

CanonicalInstance invert_parameters(const GeneralInstance& inst) {
  return invert_full(inst).canonical;
}

Disk rogosinski_disk(cplx z, cplx d0) {
  double m = std::abs(z);
  if (m <= 0.0 || m >= 1.0) fail(errc::invalid_argument, "need 0 < |z| < 1");
  if (std::abs(d0) >= 1.0) fail(errc::invalid_derivative, "need |f'(0)| < 1");
  double m2 = m * m;
  double d2 = std::norm(d0);
  double denom = 1.0 - m2 * d2;
  return {z * d0 * (1.0 - m2) / denom, m2 * (1.0 - d2) / denom};
}

}  // namespace sr
