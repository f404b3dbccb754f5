#include "core/jet.hpp"

#include <algorithm>
#include <cmath>

namespace sr {

namespace {

constexpr double kDivisionThreshold = 1e-14;

void require_same_center(const Jet& a, const Jet& b) {
  if (a.center() != b.center())
    fail(errc::center_mismatch, "jet centers differ");
}

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  int n = common_order(a, b);
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Jet(a.center(), std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  int n = common_order(a, b);
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Jet(a.center(), std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  int n = common_order(a, b);
  std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return Jet(a.center(), std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  if (std::abs(b.value()) < kDivisionThreshold)
    fail(errc::singular_division, "jet division by (near-)vanishing value");
  int n = common_order(a, b);
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = a.coeff(k);
    for (int j = 0; j < k; ++j) acc -= c[j] * b.coeff(k - j);
    c[k] = acc / b.coeff(0);
  }
  return Jet(a.center(), std::move(c));
}

Jet operator+(const Jet& a, cplx s) {
  std::vector<cplx> c = a.coefficients();
  c[0] += s;
  return Jet(a.center(), std::move(c));
}

Jet operator+(cplx s, const Jet& a) { return a + s; }

Jet operator-(const Jet& a, cplx s) { return a + (-s); }

Jet operator-(const Jet& a) {
  std::vector<cplx> c = a.coefficients();
  for (auto& x : c) x = -x;
  return Jet(a.center(), std::move(c));
}

Jet operator-(cplx s, const Jet& a) { return (-a) + s; }

Jet operator*(const Jet& a, cplx s) {
  std::vector<cplx> c = a.coefficients();
  for (auto& x : c) x *= s;
  return Jet(a.center(), std::move(c));
}

Jet operator*(cplx s, const Jet& a) { return a * s; }

cplx jet_derivative(const Jet& j, int n) {
  if (n < 0 || n > j.order()) fail(errc::order_exceeded, "derivative order exceeds jet order");
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return factorial * j.coeff(n);
}

Jet mobius_apply(cplx a, const Jet& j) {
  if (std::abs(a) >= 1.0) fail(errc::invalid_argument, "mobius parameter must satisfy |a| < 1");
  return (j + a) / (std::conj(a) * j + cplx(1.0));
}

Jet jet_compose(const Jet& outer, const Jet& inner) {
  if (std::abs(inner.value() - outer.center()) > 1e-12)
    fail(errc::center_mismatch, "inner value does not match outer center");
  int n = std::min(outer.order(), inner.order());
  // d = inner - center, with the constant term zeroed exactly
  std::vector<cplx> dc(static_cast<size_t>(n) + 1);
  dc[0] = cplx(0.0);
  for (int k = 1; k <= n; ++k) dc[k] = inner.coeff(k);
  Jet d(inner.center(), std::move(dc));
  Jet acc = Jet::constant(outer.coeff(n), inner.center(), n);
  for (int k = n - 1; k >= 0; --k) acc = acc * d + outer.coeff(k);
  return acc;
}

}  // namespace sr
