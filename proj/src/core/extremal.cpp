#include "core/extremal.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace sr {

namespace {

constexpr double kFeasTol = 1e-12;
constexpr double kUnimodTol = 1e-12;

bool unimodular(cplx x) { return std::abs(x) >= 1.0 - kUnimodTol; }

cplx clamp_to_disk(cplx x) {
  double m = std::abs(x);
  return (m > 1.0) ? x / m : x;
}

ExtremalSpec build(cplx z0, cplx w0, cplx lambda, cplx mu, cplx tau, cplx alpha) {
  if (std::abs(lambda) > 1.0 + kFeasTol || std::abs(mu) > 1.0 + kFeasTol ||
      std::abs(tau) > 1.0 + kFeasTol || std::abs(alpha) > 1.0 + kFeasTol)
    fail(errc::infeasible, "parameter outside the closed unit disk");
  lambda = clamp_to_disk(lambda);
  mu = clamp_to_disk(mu);
  tau = clamp_to_disk(tau);
  alpha = clamp_to_disk(alpha);

  ExtremalSpec spec;
  spec.z0 = z0;
  spec.u0 = w0 / z0;
  cplx rot = std::norm(z0) / (z0 * z0);  // r^2 / z0^2, unimodular
  spec.lambda0 = rot * lambda;
  spec.mu0 = rot * mu;
  spec.tau0 = rot * tau;
  if (unimodular(lambda)) {
    spec.case_id = 1;
    spec.lambda0 /= std::abs(spec.lambda0);
  } else if (unimodular(mu)) {
    spec.case_id = 2;
    spec.mu0 /= std::abs(spec.mu0);
  } else if (unimodular(tau)) {
    spec.case_id = 3;
    spec.tau0 /= std::abs(spec.tau0);
  } else {
    spec.case_id = 4;
    spec.alpha = alpha;
    spec.boundary = unimodular(alpha);
  }
  return spec;
}

}  // namespace

ExtremalSpec build_extremal(const CanonicalInstance& inst, cplx alpha) {
  if (inst.feasibility == Feasibility::infeasible)
    fail(errc::infeasible, "instance is infeasible");
  return build(cplx(inst.r), cplx(inst.s), inst.lambda, inst.mu, inst.tau, alpha);
}

ExtremalSpec build_extremal(const GeneralInstance& inst, cplx lambda, cplx mu, cplx tau,
                            cplx alpha) {
  return build(inst.z0, inst.w0, lambda, mu, tau, alpha);
}

std::vector<cplx> evaluate_extremal(const ExtremalSpec& spec, int order) {
  if (order < 4) fail(errc::invalid_order, "need order >= 4");
  Jet z = Jet::variable(spec.z0, order);
  Jet w = mobius_apply(-spec.z0, z);

  Jet g = [&] {
    switch (spec.case_id) {
      case 1:
        return mobius_apply(spec.u0, spec.lambda0 * w);
      case 2:
        return mobius_apply(spec.u0, w * mobius_apply(spec.lambda0, spec.mu0 * w));
      case 3:
        return mobius_apply(
            spec.u0, w * mobius_apply(spec.lambda0, w * mobius_apply(spec.mu0, spec.tau0 * w)));
      default:
        return mobius_apply(
            spec.u0,
            w * mobius_apply(spec.lambda0,
                             w * mobius_apply(spec.mu0,
                                              w * mobius_apply(spec.tau0, spec.alpha * w))));
    }
  }();
  Jet f = z * g;

  std::vector<cplx> derivs(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) derivs[n] = jet_derivative(f, n);
  return derivs;
}

SelfMapSample sample_selfmap(std::uint64_t seed, int degree, cplx z0) {
  if (degree < 1) fail(errc::invalid_argument, "degree must be >= 1");
  if (std::abs(z0) >= 1.0) fail(errc::invalid_argument, "need |z0| < 1");
  Rng rng(seed);
  SelfMapSample sample;
  sample.z0 = z0;
  sample.blaschke.rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
  sample.blaschke.zeros.reserve(static_cast<size_t>(degree));
  // Zeros kept within 0.95 so jet divisions stay well conditioned.
  for (int i = 0; i < degree; ++i) sample.blaschke.zeros.push_back(rng.in_disk(0.95));

  Jet g = blaschke_jet(sample.blaschke, z0, 8);
  Jet f = Jet::variable(z0, 8) * g;
  for (int n = 0; n <= 4; ++n) sample.attained[n] = jet_derivative(f, n);
  return sample;
}

}  // namespace sr
