#pragma once

#include <vector>

#include "alphapatch/curve.hpp"

namespace ap {

enum class Geometry { FullPlane, HalfPlane };

struct PatchSystem {
    std::vector<Contour> contours;
    std::vector<double> strengths;
    Geometry geometry = Geometry::FullPlane;
    double alpha = 0.5;
    // chord-length floor, relative to curve length
    double chord_floor_rel = 1e-8;
    // overall constant linking the contour normalization to physical velocity
    double normalization = 1.0;

    int n_patches() const { return static_cast<int>(contours.size()); }
};

struct VelocityBundle {
    std::vector<VectorField> nl;
    std::vector<ScalarField> lambda;
    std::vector<VectorField> rhs;
    // true when a reflected self-chord hit the floor at a wall-touching node
    bool wall_singularity = false;
};

void validate_system(const PatchSystem& sys);

// |x(gamma_i) - x(gamma_i - eta)|^(-alpha) with trigonometric interpolation.
double kernel_g(const Contour& c, int gamma_index, double eta, double alpha,
                double chord_floor_rel = 1e-8);

VectorField nl_velocity(const PatchSystem& sys, int k, bool* wall_flag = nullptr);

ScalarField lambda_coefficient(const PatchSystem& sys, int k, const VectorField& nl,
                               double speed_defect_tol = 1e-2);

VelocityBundle rhs(const PatchSystem& sys, double speed_defect_tol = 1e-2);

// Velocity at an off-contour point by 2D quadrature over the patch interiors.
Vec2 point_velocity(const PatchSystem& sys, Vec2 point, int quad_n);

}  // namespace ap
