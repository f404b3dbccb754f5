#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sr {

namespace {

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx p, cplx a, cplx b) {
  cplx ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

std::vector<cplx> convex_hull(std::vector<cplx> points) {
  auto less = [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  size_t n = points.size();
  if (n < 3) return points;

  std::vector<cplx> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(const std::vector<cplx>& poly) {
  double acc = 0.0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    cplx a = poly[i], b = poly[(i + 1) % n];
    acc += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * std::abs(acc);
}

double polygon_diameter(const std::vector<cplx>& poly) {
  double best = 0.0;
  for (size_t i = 0; i < poly.size(); ++i)
    for (size_t j = i + 1; j < poly.size(); ++j)
      best = std::max(best, std::abs(poly[i] - poly[j]));
  return best;
}

double distance_to_polygon(cplx p, const std::vector<cplx>& poly) {
  if (poly.empty()) return 0.0;
  if (poly.size() == 1) return std::abs(p - poly[0]);
  double best = std::abs(p - poly[0]);
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i)
    best = std::min(best, segment_distance(p, poly[i], poly[(i + 1) % n]));
  return best;
}

double hausdorff_boundary(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0.0;
  for (cplx p : a) worst = std::max(worst, distance_to_polygon(p, b));
  for (cplx p : b) worst = std::max(worst, distance_to_polygon(p, a));
  return worst;
}

double convexity_defect_polygon(const std::vector<cplx>& poly) {
  size_t n = poly.size();
  if (n < 3) return 0.0;
  double diam = polygon_diameter(poly);
  if (diam == 0.0) return 0.0;
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    cplx prev = poly[(i + n - 1) % n];
    cplx cur = poly[i];
    cplx next = poly[(i + 1) % n];
    worst = std::max(worst, -cross(prev, cur, next));
  }
  return worst / (diam * diam);
}

}  // namespace sr
