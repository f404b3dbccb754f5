#pragma once

#include <complex>
#include <vector>

#include "core/error.hpp"

namespace sr {

using cplx = std::complex<double>;

/// Truncated Taylor expansion a0 + a1(z-c) + ... + aN(z-c)^N of an analytic
/// function about a fixed center c, carried as the coefficient sequence.
/// Jets are immutable values: every operation returns a fresh jet, truncated
/// to the smaller order of its operands. Mixing centers is an error.
class Jet {
public:
  Jet(cplx center, std::vector<cplx> coefficients)
      : center_(center), coeff_(std::move(coefficients)) {
    if (coeff_.empty()) fail(errc::invalid_order, "jet needs at least one coefficient");
  }

  /// The identity map z -> z expanded at `center`.
  static Jet variable(cplx center, int order) {
    if (order < 1) fail(errc::invalid_order, "jet order must be >= 1");
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    c[0] = center;
    c[1] = cplx(1.0);
    return Jet(center, std::move(c));
  }

  static Jet constant(cplx value, cplx center, int order) {
    if (order < 0) fail(errc::invalid_order, "jet order must be >= 0");
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    c[0] = value;
    return Jet(center, std::move(c));
  }

  cplx center() const { return center_; }
  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  cplx coeff(int k) const { return coeff_[static_cast<size_t>(k)]; }
  cplx value() const { return coeff_[0]; }
  const std::vector<cplx>& coefficients() const { return coeff_; }

private:
  cplx center_;
  std::vector<cplx> coeff_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);  // Cauchy product, truncated
Jet operator/(const Jet& a, const Jet& b);  // requires |b(center)| above threshold

Jet operator+(const Jet& a, cplx s);
Jet operator+(cplx s, const Jet& a);
Jet operator-(const Jet& a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, cplx s);
Jet operator*(cplx s, const Jet& a);

/// f^(n)(center) = n! * a_n.
cplx jet_derivative(const Jet& j, int n);

/// Jet of T_a o j where T_a(z) = (z+a)/(1 + conj(a) z), |a| < 1.
Jet mobius_apply(cplx a, const Jet& j);

/// Jet of outer o inner, valid when inner's value equals outer's center
/// (no re-centering). Result carries inner's center.
Jet jet_compose(const Jet& outer, const Jet& inner);

}  // namespace sr
