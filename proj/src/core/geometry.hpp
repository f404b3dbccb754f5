#pragma once

#include <vector>

#include "core/jet.hpp"

namespace sr {

/// Convex hull of a planar point set (points as complex numbers), returned in
/// counterclockwise order without the closing repeat. Collinear interior
/// points are dropped.
std::vector<cplx> convex_hull(std::vector<cplx> points);

double polygon_area(const std::vector<cplx>& poly);
double polygon_diameter(const std::vector<cplx>& poly);

/// Distance from a point to the boundary polyline of a closed polygon.
double distance_to_polygon(cplx p, const std::vector<cplx>& poly);

/// Symmetric Hausdorff distance between the boundaries of two closed
/// polygons, measured vertex-to-polyline in both directions.
double hausdorff_boundary(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Largest inward kink of a closed polygon: max over vertices of the negative
/// part of the cross product of consecutive edges, normalized by diameter^2.
/// 0 for a convex counterclockwise polygon.
double convexity_defect_polygon(const std::vector<cplx>& poly);

}  // namespace sr
