#include "alphapatch/presets.hpp"

#include <cmath>

#include "alphapatch/errors.hpp"
#include "alphapatch/singularity.hpp"

namespace ap {

Contour make_circle(Vec2 center, double radius, int n_nodes, std::string label) {
    std::vector<Vec2> pts(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        double g = grid_gamma(i, n_nodes);
        pts[i] = {center.x + radius * std::cos(g), center.y + radius * std::sin(g)};
    }
    return make_contour(std::move(pts), std::move(label));
}

Contour make_ellipse(Vec2 center, double a, double b, int n_nodes,
                     std::string label) {
    std::vector<Vec2> pts(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        double g = grid_gamma(i, n_nodes);
        pts[i] = {center.x + a * std::cos(g), center.y + b * std::sin(g)};
    }
    Contour c = make_contour(std::move(pts), std::move(label));
    // tolerance sized to the spectral truncation floor of smooth non-circular
    // curves at moderate resolutions
    return reparametrize_constant_speed(c, 1e-8);
}

Preset make_preset(const std::string& name) {
    Preset p;
    if (name == "steady-circle") {
        p.config.alpha = 0.5;
        p.config.n_nodes = 256;
        p.config.t_end = 0.5;
        p.system.geometry = Geometry::FullPlane;
        p.system.alpha = p.config.alpha;
        p.system.contours = {make_circle({0, 0}, 1.0, p.config.n_nodes)};
        p.system.strengths = {1.0};
        return p;
    }
    if (name == "ellipse-relaxation") {
        p.config.alpha = 0.5;
        p.config.n_nodes = 256;
        p.config.t_end = 0.2;
        p.system.geometry = Geometry::FullPlane;
        p.system.alpha = p.config.alpha;
        p.system.contours = {make_ellipse({0, 0}, 2.0, 1.0, p.config.n_nodes)};
        p.system.strengths = {1.0};
        return p;
    }
    if (name == "two-patch-approach") {
        p.config.alpha = 0.5;
        p.config.n_nodes = 128;
        p.config.t_end = 1.0;
        p.config.min_distance_stop_abs = 0.6;
        p.system.geometry = Geometry::FullPlane;
        p.system.alpha = p.config.alpha;
        p.system.contours = {make_circle({-1.6, 0}, 1.0, p.config.n_nodes, "left"),
                             make_circle({1.6, 0}, 1.0, p.config.n_nodes, "right")};
        p.system.strengths = {1.0, 1.0};
        return p;
    }
    if (name == "krzy-scenario") {
        const double beta = 0.15;
        p.config.alpha = 2.0 * beta;
        p.config.n_nodes = 256;
        p.config.t_end = 0.05;
        p.config.geometry = Geometry::HalfPlane;
        p.system = build_scenario_initial_data(0.05, 5.0, 0.5, p.config.n_nodes,
                                               0.2, p.config.alpha);
        return p;
    }
    throw BadParameters("unknown preset: " + name);
}

}  // namespace ap
