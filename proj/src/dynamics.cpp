#include "alphapatch/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphapatch/errors.hpp"
#include "alphapatch/polygon.hpp"

namespace ap {

void validate_system(const PatchSystem& sys) {
    if (sys.contours.size() != sys.strengths.size())
        throw InvalidSystem("strengths count does not match contour count");
    if (sys.alpha <= 0.0 || sys.alpha >= 2.0)
        throw InvalidSystem("alpha must lie strictly inside (0,2)");
    for (size_t j = 1; j < sys.contours.size(); ++j) {
        if (sys.contours[j].n_nodes() != sys.contours[0].n_nodes())
            throw InvalidSystem("all contours must share one node count");
    }
}

double kernel_g(const Contour& c, int gamma_index, double eta, double alpha,
                double chord_floor_rel) {
    CurveInterp xi(c);
    const double gamma = grid_gamma(gamma_index, c.n_nodes());
    const double chord = (c.points[gamma_index] - xi.eval(gamma - eta)).norm();
    if (chord < chord_floor_rel * curve_length(c))
        throw ChordBelowFloor("chord below floor at eta = " + std::to_string(eta));
    return std::pow(chord, -alpha);
}

VectorField nl_velocity(const PatchSystem& sys, int k, bool* wall_flag) {
    validate_system(sys);
    const int np = sys.n_patches();
    const int n = sys.contours[k].n_nodes();
    const double h = grid_spacing(n);
    const double alpha = sys.alpha;

    std::vector<VectorField> deriv(np);
    std::vector<double> floor(np);
    for (int j = 0; j < np; ++j) {
        deriv[j] = spectral_derivative(sys.contours[j], 1);
        floor[j] = sys.chord_floor_rel * curve_length(sys.contours[j]);
    }

    bool wall_hit = false;
    VectorField out(n);
    for (int i = 0; i < n; ++i) {
        Vec2 total{0.0, 0.0};
        const Vec2 xk = sys.contours[k].points[i];
        const Vec2 dk = deriv[k][i];
        for (int j = 0; j < np; ++j) {
            const double pref = sys.strengths[j] / (2.0 * alpha) * sys.normalization;
            const double pair_floor = std::max(floor[k], floor[j]);
            Vec2 direct{0.0, 0.0};
            for (int l = 0; l < n; ++l) {
                if (j == k && l == n / 2) continue;  // eta = 0, removable for alpha < 1
                const int idx = ((i - l + n / 2) % n + n) % n;
                const Vec2 num = dk - deriv[j][idx];
                const double chord = (xk - sys.contours[j].points[idx]).norm();
                if (chord < pair_floor) {
                    if (j != k) throw PatchOverlap("chord between patches below floor");
                    throw ChordBelowFloor("self chord below floor (curve near self-intersection)");
                }
                direct += num * std::pow(chord, -alpha);
            }
            direct *= h;
            if (j == k && alpha >= 1.0) {
                // Product-integration cell rule at eta = 0: drop the trapezoid
                // estimate over [-h,h]; the linearized integrand
                // d2x(gamma) * eta * |dx(gamma) eta|^(-alpha) integrates to zero
                // over the symmetric cell.
                for (int l : {n / 2 - 1, n / 2 + 1}) {
                    const int idx = ((i - l + n / 2) % n + n) % n;
                    const Vec2 num = dk - deriv[j][idx];
                    const double chord = (xk - sys.contours[j].points[idx]).norm();
                    direct -= (h / 2.0) * num * std::pow(chord, -alpha);
                }
            }
            total += pref * direct;

            if (sys.geometry == Geometry::HalfPlane) {
                Vec2 refl{0.0, 0.0};
                for (int l = 0; l < n; ++l) {
                    const int idx = ((i - l + n / 2) % n + n) % n;
                    const Vec2 num = dk - deriv[j][idx].wall_reflect();
                    double chord = (xk - sys.contours[j].points[idx].wall_reflect()).norm();
                    if (chord < pair_floor) {
                        chord = pair_floor;
                        wall_hit = true;
                    }
                    refl += num * std::pow(chord, -alpha);
                }
                total += pref * refl * h;
            }
        }
        out[i] = total;
    }
    if (wall_flag) *wall_flag = wall_hit;
    return out;
}

ScalarField lambda_coefficient(const PatchSystem& sys, int k, const VectorField& nl,
                               double speed_defect_tol) {
    const Contour& c = sys.contours[k];
    const int n = c.n_nodes();
    const double defect = speed_defect(c);
    if (defect > speed_defect_tol)
        throw SpeedDefectTooLarge("speed defect " + std::to_string(defect) +
                                  " exceeds tolerance");

    auto dx = spectral_derivative(c, 1);
    double A = 0.0;
    for (const auto& v : dx) A += v.norm2();
    A /= n;

    ScalarField nl1(n), nl2(n);
    for (int i = 0; i < n; ++i) { nl1[i] = nl[i].x; nl2[i] = nl[i].y; }
    auto dnl1 = ap::spectral_derivative(std::span<const double>(nl1), 1);
    auto dnl2 = ap::spectral_derivative(std::span<const double>(nl2), 1);

    ScalarField f(n);
    for (int i = 0; i < n; ++i)
        f[i] = (dx[i].x * dnl1[i] + dx[i].y * dnl2[i]) / A;

    // lambda(gamma) = (gamma+pi)/(2pi) * integral(f) - int_{-pi}^{gamma} f
    //              = P(-pi) - P(gamma)  with P the periodic antiderivative of f
    auto P = spectral_antiderivative_periodic(std::span<const double>(f));
    TrigInterp p_interp{std::span<const double>(P)};
    const double p0 = p_interp.eval(-M_PI);
    ScalarField lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = p0 - P[i];
    return lambda;
}

VelocityBundle rhs(const PatchSystem& sys, double speed_defect_tol) {
    VelocityBundle bundle;
    if (sys.contours.empty()) return bundle;
    validate_system(sys);
    const int np = sys.n_patches();
    bundle.nl.resize(np);
    bundle.lambda.resize(np);
    bundle.rhs.resize(np);
    for (int k = 0; k < np; ++k) {
        bool wall = false;
        bundle.nl[k] = nl_velocity(sys, k, &wall);
        bundle.wall_singularity = bundle.wall_singularity || wall;
        bundle.lambda[k] = lambda_coefficient(sys, k, bundle.nl[k], speed_defect_tol);
        auto dx = spectral_derivative(sys.contours[k], 1);
        const int n = sys.contours[k].n_nodes();
        bundle.rhs[k].resize(n);
        for (int i = 0; i < n; ++i)
            bundle.rhs[k][i] = bundle.nl[k][i] + bundle.lambda[k][i] * dx[i];
    }
    return bundle;
}

namespace {

struct SourceRegion {
    std::vector<Vec2> poly;
    double strength;
};

// Recursive midpoint quadrature of the free-space kernel over one region.
// Cells near the evaluation point or straddling the region boundary are split.
void integrate_cell(const SourceRegion& src, Vec2 x, double exponent, Vec2 lo, Vec2 hi,
                    int depth, Vec2& acc) {
    const Vec2 mid = (lo + hi) * 0.5;
    const double diag = (hi - lo).norm();
    const double dx1 = std::max({lo.x - x.x, x.x - hi.x, 0.0});
    const double dx2 = std::max({lo.y - x.y, x.y - hi.y, 0.0});
    const double cell_dist = std::hypot(dx1, dx2);

    bool split = false;
    if (cell_dist < diag && depth < 9) {
        split = true;
    } else if (depth < 3) {
        // refine boundary-straddling cells for membership accuracy
        bool c0 = point_in_polygon(src.poly, lo);
        bool c1 = point_in_polygon(src.poly, {hi.x, lo.y});
        bool c2 = point_in_polygon(src.poly, hi);
        bool c3 = point_in_polygon(src.poly, {lo.x, hi.y});
        if (!(c0 == c1 && c1 == c2 && c2 == c3)) split = true;
    }
    if (split) {
        integrate_cell(src, x, exponent, lo, mid, depth + 1, acc);
        integrate_cell(src, x, exponent, {mid.x, lo.y}, {hi.x, mid.y}, depth + 1, acc);
        integrate_cell(src, x, exponent, {lo.x, mid.y}, {mid.x, hi.y}, depth + 1, acc);
        integrate_cell(src, x, exponent, mid, hi, depth + 1, acc);
        return;
    }
    if (!point_in_polygon(src.poly, mid)) return;
    const Vec2 r = x - mid;
    const double dist = r.norm();
    if (dist == 0.0) return;
    const double w = std::pow(dist, -exponent) * (hi.x - lo.x) * (hi.y - lo.y);
    acc += src.strength * w * Vec2{r.y, -r.x};
}

}  // namespace

Vec2 point_velocity(const PatchSystem& sys, Vec2 point, int quad_n) {
    validate_system(sys);
    std::vector<SourceRegion> sources;
    for (int j = 0; j < sys.n_patches(); ++j) {
        sources.push_back({sys.contours[j].points, sys.strengths[j]});
        if (sys.geometry == Geometry::HalfPlane) {
            std::vector<Vec2> refl(sys.contours[j].points.size());
            for (size_t i = 0; i < refl.size(); ++i)
                refl[i] = sys.contours[j].points[i].wall_reflect();
            sources.push_back({std::move(refl), -sys.strengths[j]});
        }
        const double floor = sys.chord_floor_rel * curve_length(sys.contours[j]);
        if (distance_to_polygon(sys.contours[j].points, point) < floor)
            throw PointOnBoundary("evaluation point on a patch boundary");
    }

    const double exponent = 2.0 + sys.alpha;
    Vec2 u{0.0, 0.0};
    for (const auto& src : sources) {
        Vec2 lo = src.poly[0], hi = src.poly[0];
        for (const auto& p : src.poly) {
            lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
        }
        Vec2 acc{0.0, 0.0};
        for (int i = 0; i < quad_n; ++i) {
            for (int j = 0; j < quad_n; ++j) {
                Vec2 clo{lo.x + (hi.x - lo.x) * i / quad_n,
                         lo.y + (hi.y - lo.y) * j / quad_n};
                Vec2 chi{lo.x + (hi.x - lo.x) * (i + 1) / quad_n,
                         lo.y + (hi.y - lo.y) * (j + 1) / quad_n};
                integrate_cell(src, point, exponent, clo, chi, 0, acc);
            }
        }
        u += acc;
    }
    // velocity = normalization * (theta/2) * int (x2-y2, y1-x1) |x-y|^(-2-alpha) dy
    return u * (0.5 * sys.normalization);
}

}  // namespace ap
