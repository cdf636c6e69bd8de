#include "alphapatch/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "alphapatch/errors.hpp"
#include "alphapatch/polygon.hpp"

namespace ap {

double TrapezoidBarrier::collision_time() const {
    return std::pow(3.0 * epsilon, 2.0 * beta) / (2.0 * beta * C);
}

KernelComponents kernel_components(int axis, Vec2 x, Vec2 y, double beta) {
    if (axis != 1 && axis != 2) throw BadParameters("axis must be 1 or 2");
    const Vec2 ybar = y.wall_reflect();
    const Vec2 ytilde = y.axis_reflect();
    const double e = 2.0 + 2.0 * beta;
    const double d1 = (x - y).norm();
    const double d2 = (x - ytilde).norm();
    const double d3 = (x + y).norm();
    const double d4 = (x - ybar).norm();
    if (std::min({d1, d2, d3, d4}) < 1e-14)
        throw CoincidentPoints("kernel evaluated at a coincident point");

    KernelComponents kc;
    if (axis == 1) {
        kc.parts[0] = (y.y - x.y) / std::pow(d1, e);
        kc.parts[1] = -(y.y - x.y) / std::pow(d2, e);
        kc.parts[2] = -(y.y + x.y) / std::pow(d3, e);
        kc.parts[3] = (y.y + x.y) / std::pow(d4, e);
    } else {
        kc.parts[0] = (y.x - x.x) / std::pow(d1, e);
        kc.parts[1] = (y.x + x.x) / std::pow(d2, e);
        kc.parts[2] = -(y.x + x.x) / std::pow(d3, e);
        kc.parts[3] = -(y.x - x.x) / std::pow(d4, e);
    }
    kc.sum = kc.parts[0] + kc.parts[1] + kc.parts[2] + kc.parts[3];
    return kc;
}

namespace {

void region_cell(int axis, Vec2 x, const PatchRegion& region, double beta, Vec2 lo,
                 Vec2 hi, int depth, double& acc) {
    const Vec2 mid = (lo + hi) * 0.5;
    const double diag = (hi - lo).norm();
    const double dx1 = std::max({lo.x - x.x, x.x - hi.x, 0.0});
    const double dx2 = std::max({lo.y - x.y, x.y - hi.y, 0.0});
    const double cell_dist = std::hypot(dx1, dx2);

    bool split = false;
    if (cell_dist < diag && depth < 9) {
        split = true;
    } else if (depth < 3) {
        bool c0 = point_in_polygon(region.polygon, lo);
        bool c1 = point_in_polygon(region.polygon, {hi.x, lo.y});
        bool c2 = point_in_polygon(region.polygon, hi);
        bool c3 = point_in_polygon(region.polygon, {lo.x, hi.y});
        if (!(c0 == c1 && c1 == c2 && c2 == c3)) split = true;
    }
    if (split) {
        region_cell(axis, x, region, beta, lo, mid, depth + 1, acc);
        region_cell(axis, x, region, beta, {mid.x, lo.y}, {hi.x, mid.y}, depth + 1, acc);
        region_cell(axis, x, region, beta, {lo.x, mid.y}, {mid.x, hi.y}, depth + 1, acc);
        region_cell(axis, x, region, beta, mid, hi, depth + 1, acc);
        return;
    }
    if (!point_in_polygon(region.polygon, mid)) return;
    if ((mid - x).norm() < 1e-14) return;
    const double k = kernel_components(axis, x, mid, beta).sum;
    acc += region.strength * k * (hi.x - lo.x) * (hi.y - lo.y);
}

}  // namespace

double region_velocity(int axis, VelocityPart part, Vec2 x,
                       const std::vector<PatchRegion>& regions, double beta,
                       int quad_n) {
    if (axis != 1 && axis != 2) throw BadParameters("axis must be 1 or 2");
    if (quad_n < 16) throw BadParameters("quadrature resolution must be >= 16");
    for (const auto& r : regions) {
        if (distance_to_polygon(r.polygon, x) < 1e-12)
            throw PointOnBoundary("evaluation point on a region boundary");
    }

    double acc = 0.0;
    for (const auto& region : regions) {
        Vec2 lo = region.polygon[0], hi = region.polygon[0];
        for (const auto& p : region.polygon) {
            lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
        }
        // clip to the upper-right quadrant and the good/bad strip for this axis;
        // the cut line thereby becomes a cell boundary of the quadrature grid
        lo.x = std::max(lo.x, 0.0);
        lo.y = std::max(lo.y, 0.0);
        if (axis == 1) {
            if (part == VelocityPart::Bad) hi.y = std::min(hi.y, x.y);
            else lo.y = std::max(lo.y, x.y);
        } else {
            if (part == VelocityPart::Bad) hi.x = std::min(hi.x, x.x);
            else lo.x = std::max(lo.x, x.x);
        }
        if (hi.x <= lo.x || hi.y <= lo.y) continue;
        for (int i = 0; i < quad_n; ++i) {
            for (int j = 0; j < quad_n; ++j) {
                Vec2 clo{lo.x + (hi.x - lo.x) * i / quad_n,
                         lo.y + (hi.y - lo.y) * j / quad_n};
                Vec2 chi{lo.x + (hi.x - lo.x) * (i + 1) / quad_n,
                         lo.y + (hi.y - lo.y) * (j + 1) / quad_n};
                region_cell(axis, x, region, beta, clo, chi, 0, acc);
            }
        }
    }
    const double sign = (axis == 1) ? -1.0 : 1.0;
    return sign * acc;
}

double bad_bound(int axis, Vec2 x, double m, double beta) {
    if (m <= 0.0 || beta <= 0.0 || beta >= 0.5)
        throw BadParameters("need m > 0 and beta in (0, 1/2)");
    if (axis == 1) {
        if (x.y > m * x.x)
            throw OutsideApplicabilityRegion("axis 1 bound needs x2 <= m x1");
        return (1.0 / beta) *
               (1.0 / (1.0 - 2.0 * beta) - std::pow(1.0 + m * m, -beta)) *
               std::pow(x.x, 1.0 - 2.0 * beta);
    }
    if (axis == 2) {
        if (m * x.x > x.y)
            throw OutsideApplicabilityRegion("axis 2 bound needs m x1 <= x2");
        return -(1.0 / beta) *
               (1.0 / (1.0 - 2.0 * beta) - std::pow(1.0 + 1.0 / (m * m), -beta)) *
               std::pow(x.y, 1.0 - 2.0 * beta);
    }
    throw BadParameters("axis must be 1 or 2");
}

GoodBound good_bound(int axis, Vec2 x, double m, double beta, double a) {
    if (m <= 0.0 || a <= 0.0 || beta <= 0.0 || beta >= 0.5)
        throw BadParameters("need m > 0, a > 0, beta in (0, 1/2)");
    const double m2 = m * m;
    GoodBound gb;
    if (axis == 1) {
        const double lead =
            (1.0 / (beta * std::pow(2.0, 2.0 * beta))) *
                ((1.0 - std::pow(m2 + 1.0, -beta)) / (1.0 - 2.0 * beta) +
                 1.0 / (std::pow(m, 2.0 * beta) *
                        std::pow(1.0 + 4.0 / m2, 1.0 + beta))) +
            (1.0 / (2.0 * beta)) *
                (std::pow(9.0 + m2, -beta) - std::pow(4.0 + 4.0 * m2, -beta));
        gb.leading_coefficient = -lead;
        gb.remainder_bound = (x.x / beta) * (std::pow(a, -2.0 * beta) -
                                             std::pow((m2 + 1.0) * a * a, -beta));
        return gb;
    }
    if (axis == 2) {
        gb.leading_coefficient =
            (1.0 - std::pow(m2 + 1.0, -1.0 - beta)) /
            (2.0 * beta * std::pow(m2 + 1.0, beta)) *
            (1.0 + (std::pow(2.0, 1.0 - 2.0 * beta) - 1.0) / (1.0 - 2.0 * beta));
        // tail of the separation integral; the proof leaves the remaining O(x)
        // pieces unquantified
        gb.remainder_bound = (1.0 - std::pow(m2 + 1.0, -1.0 - beta)) / beta * x.y *
                             std::pow(a, -2.0 * beta);
        return gb;
    }
    throw BadParameters("axis must be 1 or 2");
}

double combined_coefficient(int axis, double m, double beta) {
    if (beta <= 0.0 || beta >= 0.25)
        throw BadParameters("combined coefficient evaluated on (0, 0.25)");
    const double m2 = m * m;
    if (axis == 1) {
        const double bad = (1.0 / beta) * (1.0 / (1.0 - 2.0 * beta) -
                                           std::pow(1.0 + m2, -beta));
        return good_bound(1, {1.0, 0.0}, m, beta, 1.0).leading_coefficient + bad;
    }
    if (axis == 2) {
        const double bad = (1.0 / beta) * (1.0 / (1.0 - 2.0 * beta) -
                                           std::pow(1.0 + 1.0 / m2, -beta));
        return good_bound(2, {0.0, 1.0}, m, beta, 1.0).leading_coefficient - bad;
    }
    throw BadParameters("axis must be 1 or 2");
}

double sign_threshold(int axis, double m) {
    const double lo_end = 0.01, hi_end = 0.2499;
    const int scan = 256;
    double lo = lo_end;
    double flo = combined_coefficient(axis, m, lo);
    double hi = 0.0, fhi = 0.0;
    bool found = false;
    for (int i = 1; i <= scan; ++i) {
        double b = lo_end + (hi_end - lo_end) * i / scan;
        double f = combined_coefficient(axis, m, b);
        if (flo == 0.0 || f * flo < 0.0) {
            hi = b;
            fhi = f;
            found = true;
            break;
        }
        lo = b;
        flo = f;
    }
    if (!found)
        throw NoSignChange("no sign change of the combined coefficient on (0.01, 0.25)");
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        double fmid = combined_coefficient(axis, m, mid);
        if (fmid == 0.0) return mid;
        if (fmid * flo < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    (void)fhi;
    return 0.5 * (lo + hi);
}

double barrier_X(double t, const TrapezoidBarrier& barrier) {
    const double T = barrier.collision_time();
    if (t < -1e-12 || t > T + 1e-12)
        throw TimeOutOfRange("t outside [0, T] with T = " + std::to_string(T));
    const double base = std::pow(3.0 * barrier.epsilon, 2.0 * barrier.beta) -
                        2.0 * barrier.beta * barrier.C * t;
    return std::pow(std::max(base, 0.0), 1.0 / (2.0 * barrier.beta));
}

ContainmentResult barrier_containment(const PatchSystem& sys,
                                      const TrapezoidBarrier& barrier, double t,
                                      int samples_per_side) {
    if (sys.contours.empty()) throw InvalidSystem("system has no patches");
    const double X = barrier_X(t, barrier);
    const auto& poly = sys.contours[0].points;
    ContainmentResult res;
    res.margin = std::numeric_limits<double>::infinity();
    const int n = samples_per_side;
    for (int i = 0; i < n; ++i) {
        const double x1 = X + (barrier.a - X) * (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            const double x2 = barrier.m * x1 * (j + 0.5) / n;
            res.margin = std::min(res.margin, signed_distance(poly, {x1, x2}));
        }
    }
    res.contained = res.margin > 0.0;
    return res;
}

namespace {

struct PathPiece {
    double length;
    std::function<Vec2(double)> at;  // arclength in [0, length] -> point
};

Vec2 sample_path(const std::vector<PathPiece>& pieces, double s) {
    for (const auto& p : pieces) {
        if (s <= p.length) return p.at(s);
        s -= p.length;
    }
    return pieces.back().at(pieces.back().length);
}

PathPiece line(Vec2 a, Vec2 b) {
    double len = (b - a).norm();
    return {len, [=](double s) { return a + (b - a) * (s / len); }};
}

// counterclockwise arc from angle a0, of angular extent pi/2
PathPiece quarter_arc(Vec2 center, double r, double a0) {
    double len = r * M_PI / 2.0;
    return {len, [=](double s) {
                double ang = a0 + s / r;
                return center + Vec2{r * std::cos(ang), r * std::sin(ang)};
            }};
}

}  // namespace

PatchSystem build_scenario_initial_data(double epsilon, double m, double a,
                                        int n_nodes, double smoothing,
                                        double alpha) {
    if (epsilon <= 0.0 || smoothing <= 0.0 || m <= 0.0 || a <= 0.0)
        throw BadParameters("epsilon, smoothing, m, a must be positive");
    if (n_nodes < 16 || n_nodes % 2 != 0)
        throw TooFewNodes("n_nodes must be even and >= 16");
    if (!(3.0 * epsilon < a))
        throw ConstraintInfeasible("need 3*epsilon < a");
    if (a > 3.0 || m * a > 3.0)
        throw ConstraintInfeasible("trapezoid must fit inside (2 eps,3)x(0,3)");

    const double xl = 1.5 * epsilon;
    const double xr = 3.7;
    const double yt = 3.7;
    // bottom radius capped so the rounded corner stays below the lowest
    // inner-box sample point
    const double rb = std::min({smoothing, 1.2 * epsilon, 0.06});
    const double rt = std::min(smoothing, 0.25);

    std::vector<PathPiece> pieces;
    pieces.push_back(line({xl + rb, 0.0}, {xr - rb, 0.0}));
    pieces.push_back(quarter_arc({xr - rb, rb}, rb, -M_PI / 2.0));
    pieces.push_back(line({xr, rb}, {xr, yt - rt}));
    pieces.push_back(quarter_arc({xr - rt, yt - rt}, rt, 0.0));
    pieces.push_back(line({xr - rt, yt}, {xl + rt, yt}));
    pieces.push_back(quarter_arc({xl + rt, yt - rt}, rt, M_PI / 2.0));
    pieces.push_back(line({xl, yt - rt}, {xl, rb}));
    pieces.push_back(quarter_arc({xl + rb, rb}, rb, M_PI));

    double total = 0.0;
    for (const auto& p : pieces) total += p.length;

    // sample densely at equal arclength, then truncate to the working band;
    // the truncation is the mollifier, and leaves an alias-free trig
    // polynomial whose derivatives are spectrally exact on the n_nodes grid
    const int n_dense = 16 * n_nodes;
    std::vector<double> d1(n_dense), d2(n_dense);
    for (int i = 0; i < n_dense; ++i) {
        Vec2 p = sample_path(pieces, total * i / n_dense);
        d1[i] = p.x;
        d2[i] = p.y;
    }
    auto c1 = spectral_resample(std::span<const double>(d1), n_nodes);
    auto c2 = spectral_resample(std::span<const double>(d2), n_nodes);

    std::vector<Vec2> pts(n_nodes);
    for (int i = 0; i < n_nodes; ++i) pts[i] = {c1[i], c2[i]};
    Contour cur = make_contour(std::move(pts), "D0");

    // alternate high-mode damping with arclength equalization; the corners
    // are near the grid scale, so either operation alone stalls while the
    // pair settles on a smooth constant-speed curve
    for (int k = 0; k < 40; ++k) {
        std::vector<double> f1(n_nodes), f2(n_nodes);
        for (int i = 0; i < n_nodes; ++i) {
            f1[i] = cur.points[i].x;
            f2[i] = cur.points[i].y;
        }
        f1 = spectral_filter(std::span<const double>(f1), 36.0, 8);
        f2 = spectral_filter(std::span<const double>(f2), 36.0, 8);
        for (int i = 0; i < n_nodes; ++i) cur.points[i] = {f1[i], f2[i]};
        cur = equalize_arclength_once(cur);
        if (speed_defect(cur) <= 2e-4) break;
    }
    cur = reparametrize_constant_speed(cur, 2e-4);

    double min_y = std::numeric_limits<double>::infinity();
    for (const auto& p : cur.points) min_y = std::min(min_y, p.y);
    if (min_y < 0.0)
        for (auto& p : cur.points) p.y -= min_y;  // keep the patch weakly above the wall

    pts = cur.points;

    // verify the imposed inclusions by sampling
    for (int i = 0; i < 24; ++i) {
        for (int j = 0; j < 24; ++j) {
            Vec2 q{2.0 * epsilon + (3.0 - 2.0 * epsilon) * (i + 0.5) / 24.0,
                   0.01 + (3.0 - 0.02) * (j + 0.5) / 24.0};
            if (!point_in_polygon(pts, q))
                throw ConstraintInfeasible("inner box (2 eps,3)x(0,3) not contained");
        }
    }
    for (const auto& p : pts) {
        if (p.x < epsilon - 1e-9 || p.x > 4.0 + 1e-9 || p.y < -1e-9 || p.y > 4.0 + 1e-9)
            throw ConstraintInfeasible("patch escapes the outer box (eps,4)x(0,4)");
    }

    Contour d0 = make_contour(pts, "D0");
    std::vector<Vec2> mirrored(n_nodes);
    for (int i = 0; i < n_nodes; ++i)
        mirrored[i] = pts[(n_nodes - i) % n_nodes].axis_reflect();
    Contour d0m = make_contour(std::move(mirrored), "D0_mirror");

    PatchSystem sys;
    sys.contours = {std::move(d0), std::move(d0m)};
    sys.strengths = {1.0, -1.0};
    sys.geometry = Geometry::HalfPlane;
    sys.alpha = alpha;
    return sys;
}

}  // namespace ap
