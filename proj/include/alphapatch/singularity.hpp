#pragma once

#include <array>
#include <vector>

#include "alphapatch/dynamics.hpp"

namespace ap {

struct TrapezoidBarrier {
    double epsilon = 0.05;  // X(0) = 3*epsilon
    double m = 5.0;         // trapezoid slope
    double a = 0.5;         // trapezoid width bound
    double C = 1.0;         // barrier speed constant
    double beta = 0.15;     // in (0, 1/6)

    double collision_time() const;  // T = (3 eps)^(2 beta) / (2 beta C)
};

struct PatchRegion {
    std::vector<Vec2> polygon;
    double strength = 1.0;
};

struct KernelComponents {
    std::array<double, 4> parts{};
    double sum = 0.0;
};

enum class VelocityPart { Good, Bad };

// The four signed half-plane kernel components for the given axis (1 or 2),
// with reflections ybar = (y1,-y2) and ytilde = (-y1,y2).
KernelComponents kernel_components(int axis, Vec2 x, Vec2 y, double beta);

// u_axis restricted to the good/bad strip, by midpoint quadrature with one
// subdivision of cells straddling the cut line and local refinement near x.
double region_velocity(int axis, VelocityPart part, Vec2 x,
                       const std::vector<PatchRegion>& regions, double beta,
                       int quad_n);

// Closed-form lemma bounds: upper bound on u1_bad (axis 1, x2 <= m x1) and
// lower bound on u2_bad (axis 2, m x1 <= x2).
double bad_bound(int axis, Vec2 x, double m, double beta);

struct GoodBound {
    double leading_coefficient = 0.0;  // multiplies x^(1-2 beta)
    double remainder_bound = 0.0;      // explicit O(x) piece
};

GoodBound good_bound(int axis, Vec2 x, double m, double beta, double a);

// Signed leading coefficient of x^(1-2 beta) combining good and bad bounds;
// axis 1 negative / axis 2 positive means the singularity mechanism is active.
double combined_coefficient(int axis, double m, double beta);

// Bisection root of combined_coefficient(axis, m, .) on (0.01, 0.25), to 1e-6.
double sign_threshold(int axis, double m);

double barrier_X(double t, const TrapezoidBarrier& barrier);

struct ContainmentResult {
    bool contained = false;
    double margin = 0.0;  // signed distance of worst sample to patch boundary
};

// Tests the trapezoid K(t) = {x1 in (X(t), a), x2 in (0, m x1)} for
// containment in the designated right patch (index 0).
ContainmentResult barrier_containment(const PatchSystem& sys,
                                      const TrapezoidBarrier& barrier, double t,
                                      int samples_per_side = 24);

// Odd-symmetric two-patch half-plane initial data: a rounded region D0 with
// (2 eps,3)x(0,3) inside D0 inside (eps,4)x(0,4), plus its mirror with
// strength -1.
PatchSystem build_scenario_initial_data(double epsilon, double m, double a,
                                        int n_nodes, double smoothing,
                                        double alpha = 0.3);

}  // namespace ap
