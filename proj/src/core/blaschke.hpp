#pragma once

#include <vector>

#include "core/jet.hpp"

namespace sr {

/// Finite Blaschke product e^{i theta} prod_j (z - z_j)/(1 - conj(z_j) z),
/// all zeros strictly inside the unit disk. Degree = number of zeros;
/// degree 0 is the constant e^{i theta}.
struct BlaschkeProduct {
  double rotation = 0.0;
  std::vector<cplx> zeros;

  int degree() const { return static_cast<int>(zeros.size()); }
};

cplx blaschke_eval(const BlaschkeProduct& b, cplx z);

/// Jet of the product at an interior center, built factor-wise.
Jet blaschke_jet(const BlaschkeProduct& b, cplx center, int order);

}  // namespace sr
