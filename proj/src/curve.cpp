#include "alphapatch/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphapatch/errors.hpp"

namespace ap {

namespace {

std::vector<double> component(const std::vector<Vec2>& pts, int which) {
    std::vector<double> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) out[i] = which == 0 ? pts[i].x : pts[i].y;
    return out;
}

double periodic_dist(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 2.0 * M_PI - d);
}

}  // namespace

Contour make_contour(std::vector<Vec2> points, std::string label) {
    const int n = static_cast<int>(points.size());
    if (n < 16 || n % 2 != 0)
        throw TooFewNodes("contour needs an even node count >= 16, got " +
                          std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if ((points[(i + 1) % n] - points[i]).norm() == 0.0)
            throw DegenerateSegment("consecutive duplicate points at node " +
                                    std::to_string(i));
    }
    return Contour{std::move(points), std::move(label)};
}

ScalarField magnitudes(const VectorField& f) {
    ScalarField out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i].norm();
    return out;
}

VectorField spectral_derivative(const Contour& c, int order) {
    const int n = c.n_nodes();
    if (order < 1 || order > n / 4)
        throw OrderTooHigh("derivative order " + std::to_string(order) +
                           " exceeds n/4 = " + std::to_string(n / 4));
    auto d1 = ap::spectral_derivative(std::span<const double>(component(c.points, 0)), order);
    auto d2 = ap::spectral_derivative(std::span<const double>(component(c.points, 1)), order);
    VectorField out(n);
    for (int i = 0; i < n; ++i) out[i] = {d1[i], d2[i]};
    return out;
}

ScalarField spectral_derivative(const ScalarField& f, int order) {
    return ap::spectral_derivative(std::span<const double>(f), order);
}

Contour resample(const Contour& c, int n_new) {
    if (n_new < 16 || n_new % 2 != 0)
        throw TooFewNodes("resample target must be even >= 16");
    auto r1 = spectral_resample(std::span<const double>(component(c.points, 0)), n_new);
    auto r2 = spectral_resample(std::span<const double>(component(c.points, 1)), n_new);
    std::vector<Vec2> pts(n_new);
    for (int i = 0; i < n_new; ++i) pts[i] = {r1[i], r2[i]};
    return Contour{std::move(pts), c.label};
}

Contour reflect(const Contour& c) {
    Contour out = c;
    for (auto& p : out.points) p.y = -p.y;
    return out;
}

double area(const Contour& c) {
    const int n = c.n_nodes();
    auto d = spectral_derivative(c, 1);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += c.points[i].x * d[i].y - c.points[i].y * d[i].x;
    return 0.5 * sum * grid_spacing(n);
}

double curve_length(const Contour& c) {
    auto d = spectral_derivative(c, 1);
    double sum = 0.0;
    for (const auto& v : d) sum += v.norm();
    return sum * grid_spacing(c.n_nodes());
}

double speed_defect(const Contour& c) {
    auto d = spectral_derivative(c, 1);
    double mean = 0.0;
    for (const auto& v : d) mean += v.norm2();
    mean /= c.n_nodes();
    if (mean == 0.0) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& v : d) worst = std::max(worst, std::fabs(v.norm2() - mean));
    return worst / mean;
}

CurveInterp::CurveInterp(const Contour& c)
    : x1(std::span<const double>(component(c.points, 0))),
      x2(std::span<const double>(component(c.points, 1))) {}

Vec2 CurveInterp::eval(double gamma, int order) const {
    return {x1.eval(gamma, order), x2.eval(gamma, order)};
}

Contour equalize_arclength_once(const Contour& c) {
    const int n = c.n_nodes();
    auto d = spectral_derivative(c, 1);
    ScalarField speed(n);
    for (int i = 0; i < n; ++i) speed[i] = d[i].norm();
    const double mean_speed = trapezoid_mean(speed);
    double min_speed = *std::min_element(speed.begin(), speed.end());
    if (min_speed <= 1e-12 * mean_speed)
        throw DegenerateCurve("vanishing tangent speed");

    // arclength from -pi: L(gamma) = mean*(gamma+pi) + P(gamma) - P(-pi)
    auto periodic_part = spectral_antiderivative_periodic(std::span<const double>(speed));
    TrigInterp p_interp{std::span<const double>(periodic_part)};
    TrigInterp s_interp{std::span<const double>(speed)};
    const double p0 = p_interp.eval(-M_PI);
    const double total = mean_speed * 2.0 * M_PI;
    auto arclen = [&](double g) {
        return mean_speed * (g + M_PI) + p_interp.eval(g) - p0;
    };

    CurveInterp xi(c);
    std::vector<Vec2> pts(n);
    for (int i = 0; i < n; ++i) {
        const double target = total * i / n;
        double g = grid_gamma(i, n);
        bool ok = false;
        for (int it = 0; it < 100; ++it) {
            double err = arclen(g) - target;
            if (std::fabs(err) <= 1e-14 * total) { ok = true; break; }
            double s = s_interp.eval(g);
            if (s <= 1e-12 * mean_speed)
                throw DegenerateCurve("vanishing speed during arclength inversion");
            g -= err / s;
        }
        if (!ok) throw NoConvergence("arclength inversion did not converge");
        pts[i] = xi.eval(g);
    }
    return Contour{std::move(pts), c.label};
}

Contour reparametrize_constant_speed(const Contour& c, double tol) {
    Contour cur = c;
    for (int pass = 0; pass < 10; ++pass) {
        if (speed_defect(cur) <= tol) return cur;
        cur = equalize_arclength_once(cur);
    }
    if (speed_defect(cur) > tol)
        throw NoConvergence("constant-speed reparametrization stalled above tolerance");
    return cur;
}

ArcChordReport arc_chord(const Contour& c, double chord_floor_rel) {
    const int n = c.n_nodes();
    const double floor = chord_floor_rel * curve_length(c);
    auto d = spectral_derivative(c, 1);

    ArcChordReport rep;
    rep.grid.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double eta = grid_gamma(j, n);
            double F;
            if (j == n / 2) {  // eta = 0 column: diagonal limit
                F = 1.0 / d[i].norm();
            } else {
                int idx = ((i - j + n / 2) % n + n) % n;
                double chord = (c.points[i] - c.points[idx]).norm();
                if (chord < floor)
                    throw SelfIntersection("chord below floor at gamma index " +
                                           std::to_string(i));
                F = std::fabs(eta) / chord;
            }
            rep.grid[i][j] = F;
            if (F > rep.sup_value) {
                rep.sup_value = F;
                rep.argmax_gamma = grid_gamma(i, n);
                rep.argmax_eta = eta;
            }
        }
    }
    return rep;
}

double lp_seminorm(std::span<const double> f, double p) {
    if (p < 1.0) throw BadExponent("lp_seminorm requires p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : f) m = std::max(m, std::fabs(v));
        return m;
    }
    const double h = grid_spacing(static_cast<int>(f.size()));
    double sum = 0.0;
    for (double v : f) sum += std::pow(std::fabs(v), p);
    return std::pow(sum * h, 1.0 / p);
}

double lp_seminorm(const VectorField& f, double p) {
    return lp_seminorm(std::span<const double>(magnitudes(f)), p);
}

double holder_seminorm(std::span<const double> f, double delta) {
    if (delta <= 0.0 || delta > 1.0) throw BadExponent("holder exponent must be in (0,1]");
    const int n = static_cast<int>(f.size());
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dist = periodic_dist(grid_gamma(i, n), grid_gamma(j, n));
            sup = std::max(sup, std::fabs(f[i] - f[j]) / std::pow(dist, delta));
        }
    }
    return sup;
}

double holder_seminorm(const VectorField& f, double delta) {
    if (delta <= 0.0 || delta > 1.0) throw BadExponent("holder exponent must be in (0,1]");
    const int n = static_cast<int>(f.size());
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dist = periodic_dist(grid_gamma(i, n), grid_gamma(j, n));
            sup = std::max(sup, (f[i] - f[j]).norm() / std::pow(dist, delta));
        }
    }
    return sup;
}

}  // namespace ap
