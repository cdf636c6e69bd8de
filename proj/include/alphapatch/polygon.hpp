#pragma once

#include <span>
#include <vector>

#include "alphapatch/vec2.hpp"

namespace ap {

// Winding-number membership test for a closed polygon given by its vertices.
bool point_in_polygon(std::span<const Vec2> poly, Vec2 p);

// Distance from p to the polygon boundary (closed polyline).
double distance_to_polygon(std::span<const Vec2> poly, Vec2 p);

// Positive inside, negative outside.
double signed_distance(std::span<const Vec2> poly, Vec2 p);

double polygon_area(std::span<const Vec2> poly);

}  // namespace ap
