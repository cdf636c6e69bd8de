#pragma once

#include <span>
#include <string>
#include <vector>

#include "alphapatch/spectral.hpp"
#include "alphapatch/vec2.hpp"

namespace ap {

using ScalarField = std::vector<double>;
using VectorField = std::vector<Vec2>;

// Closed 2pi-periodic planar curve, sampled at gamma_i = -pi + 2*pi*i/n.
struct Contour {
    std::vector<Vec2> points;
    std::string label;

    int n_nodes() const { return static_cast<int>(points.size()); }
};

struct ArcChordReport {
    // grid[i][j] = F(gamma_i, eta_j) with eta_j = -pi + 2*pi*j/n
    std::vector<std::vector<double>> grid;
    double sup_value = 0.0;
    double argmax_gamma = 0.0;
    double argmax_eta = 0.0;
};

Contour make_contour(std::vector<Vec2> points, std::string label = "");

// Component-wise magnitudes of a vector field.
ScalarField magnitudes(const VectorField& f);

// k-th spectral derivative of the curve (k <= n/4).
VectorField spectral_derivative(const Contour& c, int order = 1);

ScalarField spectral_derivative(const ScalarField& f, int order = 1);

Contour resample(const Contour& c, int n_new);

Contour reflect(const Contour& c);

// Signed Green's-theorem area, positive for counterclockwise orientation.
double area(const Contour& c);

double curve_length(const Contour& c);

// Relative defect of |dx/dgamma|^2 against its mean.
double speed_defect(const Contour& c);

// One relaxation sweep toward equal arclength spacing (Newton inversion of
// the spectral arclength function).
Contour equalize_arclength_once(const Contour& c);

Contour reparametrize_constant_speed(const Contour& c, double tol = 1e-10);

ArcChordReport arc_chord(const Contour& c, double chord_floor_rel = 1e-8);

// (integral of |f|^p dgamma)^(1/p) by the trapezoidal rule; p = inf -> max.
double lp_seminorm(std::span<const double> f, double p);
double lp_seminorm(const VectorField& f, double p);

// Discrete pairwise sup of |f(g_i)-f(g_j)| / dist(g_i,g_j)^delta, periodic distance.
double holder_seminorm(std::span<const double> f, double delta);
double holder_seminorm(const VectorField& f, double delta);

// Pair of interpolants for the two curve components.
struct CurveInterp {
    TrigInterp x1, x2;
    explicit CurveInterp(const Contour& c);
    Vec2 eval(double gamma, int order = 0) const;
};

}  // namespace ap
