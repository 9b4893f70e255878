#pragma once

#include <cstddef>
#include <vector>

namespace urbancl::geo {

// Planar coordinates are kilometers; geodesic coordinates are degrees
// (x = longitude, y = latitude).
struct GeoPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class DistanceMode { Planar, Geodesic };

// Closed ring (last vertex connects back to the first), at least 3 vertices,
// simple (non-self-intersecting), no two consecutive duplicate vertices.
struct RegionBoundary {
    std::vector<GeoPoint> points;
};

inline constexpr double kEarthRadiusKm = 6371.0;

// Throws InvalidGeometryError when the value is unusable in the given mode.
void validate_point(const GeoPoint& p, DistanceMode mode);
void validate_boundary(const RegionBoundary& b);

double distance(const GeoPoint& p, const GeoPoint& q, DistanceMode mode = DistanceMode::Planar);

// Arithmetic mean of the vertex sequence.
GeoPoint centroid(const RegionBoundary& b);

// Closure semantics: points on the ring count as inside.
bool contains(const RegionBoundary& b, const GeoPoint& p);

// Number of vertex pairs (one from each boundary) within tol km of each other.
std::size_t shared_vertex_count(const RegionBoundary& a, const RegionBoundary& b, double tol);

}  // namespace urbancl::geo
