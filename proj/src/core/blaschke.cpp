#include "core/blaschke.hpp"

#include <cmath>

namespace sr {

namespace {

void validate_zeros(const BlaschkeProduct& b) {
  for (cplx zj : b.zeros)
    if (std::abs(zj) >= 1.0) fail(errc::invalid_argument, "Blaschke zero outside the open disk");
}

}  // namespace

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
  validate_zeros(b);
  cplx v = std::polar(1.0, b.rotation);
  for (cplx zj : b.zeros) v *= (z - zj) / (cplx(1.0) - std::conj(zj) * z);
  return v;
}

Jet blaschke_jet(const BlaschkeProduct& b, cplx center, int order) {
  validate_zeros(b);
  if (std::abs(center) >= 1.0) fail(errc::invalid_argument, "jet center must be inside the disk");
  Jet z = Jet::variable(center, order);
  Jet acc = Jet::constant(std::polar(1.0, b.rotation), center, order);
  for (cplx zj : b.zeros) acc = acc * ((z - zj) / (cplx(1.0) - std::conj(zj) * z));
  return acc;
}

}  // namespace sr
