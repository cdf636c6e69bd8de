#include "alphapatch/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ap {

bool point_in_polygon(std::span<const Vec2> poly, Vec2 p) {
    const size_t n = poly.size();
    int winding = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && (b - a).cross(p - a) > 0.0) ++winding;
        } else {
            if (b.y <= p.y && (b - a).cross(p - a) < 0.0) --winding;
        }
    }
    return winding != 0;
}

double distance_to_polygon(std::span<const Vec2> poly, Vec2 p) {
    const size_t n = poly.size();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        Vec2 ab = b - a;
        double len2 = ab.norm2();
        double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, (p - (a + ab * t)).norm());
    }
    return best;
}

double signed_distance(std::span<const Vec2> poly, Vec2 p) {
    double d = distance_to_polygon(poly, p);
    return point_in_polygon(poly, p) ? d : -d;
}

double polygon_area(std::span<const Vec2> poly) {
    const size_t n = poly.size();
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) sum += poly[i].cross(poly[(i + 1) % n]);
    return 0.5 * sum;
}

}  // namespace ap
