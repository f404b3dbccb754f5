#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/blaschke.hpp"
#include "core/disks.hpp"

namespace sr {

/// One of the nested Mobius compositions attaining the order-4 disk:
///   case 1: f(z) = z T_{u0}(lambda0 W)
///   case 2: f(z) = z T_{u0}(W T_{lambda0}(mu0 W))
///   case 3: f(z) = z T_{u0}(W T_{lambda0}(W T_{mu0}(tau0 W)))
///   case 4: f(z) = z T_{u0}(W T_{lambda0}(W T_{mu0}(W T_{tau0}(alpha W))))
/// with W = T_{-z0}(z), u0 = w0/z0 and rotated parameters
/// lambda0 = r^2 lambda / z0^2 (similarly mu0, tau0).
struct ExtremalSpec {
  int case_id = 4;
  cplx z0{};
  cplx u0{};
  cplx lambda0{}, mu0{}, tau0{};
  cplx alpha{};
  bool boundary = false;  // case 4 with |alpha| = 1
};

ExtremalSpec build_extremal(const CanonicalInstance& inst, cplx alpha);
ExtremalSpec build_extremal(const GeneralInstance& inst, cplx lambda, cplx mu, cplx tau,
                            cplx alpha);

/// Derivatives f^(0..order)(z0) of the composition, evaluated through jets.
/// This is the module's only derivative oracle; no closed forms are used here.
std::vector<cplx> evaluate_extremal(const ExtremalSpec& spec, int order);

/// Random self-map f = z * B with B a Blaschke product of the given degree,
/// plus its jet-evaluated data at z0. Deterministic in the seed.
struct SelfMapSample {
  BlaschkeProduct blaschke;
  cplx z0{};
  std::array<cplx, 5> attained{};  // f(z0), f'(z0), ..., f''''(z0)
};

SelfMapSample sample_selfmap(std::uint64_t seed, int degree, cplx z0);

}  // namespace sr
