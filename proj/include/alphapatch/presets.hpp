#pragma once

#include <string>

#include "alphapatch/config.hpp"
#include "alphapatch/dynamics.hpp"

namespace ap {

Contour make_circle(Vec2 center, double radius, int n_nodes,
                    std::string label = "circle");

// (a cos, b sin), constant-speed reparametrized
Contour make_ellipse(Vec2 center, double a, double b, int n_nodes,
                     std::string label = "ellipse");

struct Preset {
    SimulationConfig config;
    PatchSystem system;
};

// Known names: steady-circle, ellipse-relaxation, two-patch-approach,
// krzy-scenario.
Preset make_preset(const std::string& name);

}  // namespace ap
