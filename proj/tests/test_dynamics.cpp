#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alphapatch/dynamics.hpp"
#include "alphapatch/errors.hpp"

using namespace ap;

namespace {

Contour circle(int n, double R = 1.0, Vec2 center = {0, 0}) {
    std::vector<Vec2> pts(n);
    for (int i = 0; i < n; ++i) {
        double g = grid_gamma(i, n);
        pts[i] = {center.x + R * std::cos(g), center.y + R * std::sin(g)};
    }
    return make_contour(std::move(pts));
}

PatchSystem single_circle(int n, double alpha, Vec2 center = {0, 0},
                          Geometry geo = Geometry::FullPlane) {
    PatchSystem sys;
    sys.contours = {circle(n, 1.0, center)};
    sys.strengths = {1.0};
    sys.alpha = alpha;
    sys.geometry = geo;
    return sys;
}

// outward normal of a counterclockwise curve
Vec2 outward_normal(const Contour& c, int i) {
    auto d = spectral_derivative(c, 1);
    Vec2 t = d[i] / d[i].norm();
    return {t.y, -t.x};
}

}  // namespace

TEST_CASE("kernel_g on the unit circle") {
    Contour c = circle(256);
    int i0 = 128;  // gamma = 0
    CHECK(std::abs(kernel_g(c, i0, M_PI, 1.0) - 0.5) < 1e-12);
    CHECK(std::abs(kernel_g(c, i0, M_PI / 2.0, 1.0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(kernel_g(c, i0, M_PI, 0.5) - std::pow(2.0, -0.5)) < 1e-12);
    CHECK_THROWS_AS(kernel_g(c, i0, 1e-9, 1.0, 1e-3), ChordBelowFloor);
}

TEST_CASE("circle nl velocity is tangential") {
    PatchSystem sys = single_circle(256, 0.5);
    auto nl = nl_velocity(sys, 0);
    double worst = 0.0;
    for (int i = 0; i < 256; ++i)
        worst = std::max(worst, std::abs(nl[i].dot(outward_normal(sys.contours[0], i))));
    CHECK(worst < 1e-6);

    // oracle: interior 2D quadrature gives zero normal velocity as well
    for (int i = 0; i < 256; i += 64) {
        Vec2 nrm = outward_normal(sys.contours[0], i);
        Vec2 x = sys.contours[0].points[i] - 0.01 * nrm;
        Vec2 u = point_velocity(sys, x, 64);
        CHECK(std::abs(u.dot(nrm)) < 2e-3);
    }
}

TEST_CASE("circle nl velocity stays tangential for alpha >= 1") {
    for (double alpha : {1.0, 1.5}) {
        PatchSystem sys = single_circle(256, alpha);
        auto nl = nl_velocity(sys, 0);
        double worst = 0.0;
        for (int i = 0; i < 256; ++i)
            worst = std::max(worst,
                             std::abs(nl[i].dot(outward_normal(sys.contours[0], i))));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("half-plane velocity = full-plane + reflected image") {
    const int n = 128;
    PatchSystem half = single_circle(n, 0.5, {0, 10}, Geometry::HalfPlane);
    PatchSystem full = single_circle(n, 0.5, {0, 10});
    auto nl_h = nl_velocity(half, 0);
    auto nl_f = nl_velocity(full, 0);

    // image system: mirrored circle with opposite strength, interior quadrature
    PatchSystem image;
    image.contours = {circle(n, 1.0, {0, -10})};
    image.strengths = {-1.0};
    image.alpha = 0.5;
    for (int i = 0; i < n; i += 16) {
        Vec2 nrm = outward_normal(half.contours[0], i);
        double lhs = (nl_h[i] - nl_f[i]).dot(nrm);
        double rhs_val = point_velocity(image, half.contours[0].points[i], 64).dot(nrm);
        CHECK(std::abs(lhs - rhs_val) < 1e-3);
    }
}

TEST_CASE("far separated patches: crude cross-term bound") {
    const int n = 128;
    const double alpha = 0.5;
    PatchSystem two;
    two.contours = {circle(n, 1.0, {-50, 0}), circle(n, 1.0, {50, 0})};
    two.strengths = {1.0, 1.0};
    two.alpha = alpha;
    PatchSystem one = single_circle(n, alpha, {-50, 0});
    auto nl_two = nl_velocity(two, 0);
    auto nl_one = nl_velocity(one, 0);
    double dx_max = 0.0;
    for (const auto& v : spectral_derivative(two.contours[0], 1))
        dx_max = std::max(dx_max, v.norm());
    const double bound = 2.0 * M_PI * 2.0 * std::pow(98.0, -alpha) * dx_max;
    for (int i = 0; i < n; ++i)
        CHECK((nl_two[i] - nl_one[i]).norm() <= bound);
}

TEST_CASE("lambda properties") {
    PatchSystem sys = single_circle(256, 0.7);
    auto nl = nl_velocity(sys, 0);
    auto lam = lambda_coefficient(sys, 0, nl);
    for (double v : lam) CHECK(std::abs(v) < 1e-8);

    PatchSystem esys;
    {
        std::vector<Vec2> pts(256);
        for (int i = 0; i < 256; ++i) {
            double g = grid_gamma(i, 256);
            pts[i] = {2.0 * std::cos(g), std::sin(g)};
        }
        esys.contours = {reparametrize_constant_speed(make_contour(pts), 1e-8)};
        esys.strengths = {1.0};
        esys.alpha = 0.5;
    }
    auto enl = nl_velocity(esys, 0);
    auto elam = lambda_coefficient(esys, 0, enl);

    // closed loop: the spectral derivative of lambda integrates to zero
    auto dlam = spectral_derivative(elam, 1);
    double integral = 0.0;
    for (double v : dlam) integral += v;
    integral *= grid_spacing(256);
    CHECK(std::abs(integral) < 1e-10);

    // two-fold symmetry of the ellipse
    for (int i = 0; i < 256; ++i)
        CHECK(std::abs(elam[i] - elam[(i + 128) % 256]) < 1e-8);
}

TEST_CASE("rhs bundle") {
    PatchSystem sys = single_circle(256, 0.5);
    auto bundle = rhs(sys);
    auto dx = spectral_derivative(sys.contours[0], 1);
    for (int i = 0; i < 256; ++i) {
        Vec2 recon = bundle.nl[0][i] + bundle.lambda[0][i] * dx[i];
        CHECK((bundle.rhs[0][i] - recon).norm() == 0.0);
        CHECK(std::abs(bundle.rhs[0][i].dot(outward_normal(sys.contours[0], i))) < 1e-6);
    }

    PatchSystem empty;
    auto eb = rhs(empty);
    CHECK(eb.nl.empty());
    CHECK(eb.rhs.empty());
}

TEST_CASE("odd-symmetric half-plane system has mirrored rhs") {
    const int n = 128;
    PatchSystem sys;
    Contour right = circle(n, 1.0, {3, 2});
    std::vector<Vec2> mirrored(n);
    for (int i = 0; i < n; ++i)
        mirrored[i] = right.points[(n - i) % n].axis_reflect();
    sys.contours = {right, make_contour(mirrored)};
    sys.strengths = {1.0, -1.0};
    sys.geometry = Geometry::HalfPlane;
    sys.alpha = 0.5;
    auto bundle = rhs(sys);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec2 expect = bundle.rhs[0][(n - i) % n].axis_reflect();
        worst = std::max(worst, (bundle.rhs[1][i] - expect).norm());
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("point velocity far-field decay") {
    PatchSystem sys = single_circle(128, 0.6);
    const double d = 20.0;
    double u1 = point_velocity(sys, {d, 0}, 64).norm();
    double u2 = point_velocity(sys, {2.0 * d, 0}, 64).norm();
    double expect = std::pow(2.0, 1.0 + sys.alpha);
    CHECK(std::abs(u1 / u2 - expect) / expect < 0.05);
}

TEST_CASE("point velocity wall condition and mirror identity") {
    PatchSystem sys = single_circle(128, 0.5, {2, 3}, Geometry::HalfPlane);
    Vec2 uw = point_velocity(sys, {0.5, 0.0}, 64);
    CHECK(std::abs(uw.y) < 1e-10);

    const int n = 128;
    PatchSystem odd;
    Contour right = circle(n, 1.0, {3, 2});
    std::vector<Vec2> mirrored(n);
    for (int i = 0; i < n; ++i)
        mirrored[i] = right.points[(n - i) % n].axis_reflect();
    odd.contours = {right, make_contour(mirrored)};
    odd.strengths = {1.0, -1.0};
    odd.geometry = Geometry::HalfPlane;
    odd.alpha = 0.5;
    Vec2 up = point_velocity(odd, {0.7, 1.1}, 64);
    Vec2 um = point_velocity(odd, {-0.7, 1.1}, 64);
    CHECK(std::abs(um.x + up.x) < 1e-6);
    CHECK(std::abs(um.y - up.y) < 1e-6);

    CHECK_THROWS_AS(point_velocity(sys, {2, 4}, 32), PointOnBoundary);
}

TEST_CASE("nl velocity self-convergence under node doubling") {
    auto normal_dev = [](int n, double alpha) {
        PatchSystem sys;
        std::vector<Vec2> pts(n);
        for (int i = 0; i < n; ++i) {
            double g = grid_gamma(i, n);
            pts[i] = {2.0 * std::cos(g), std::sin(g)};
        }
        sys.contours = {reparametrize_constant_speed(make_contour(pts), 1e-7)};
        sys.strengths = {1.0};
        sys.alpha = alpha;
        auto nl = nl_velocity(sys, 0);
        auto d = spectral_derivative(sys.contours[0], 1);
        // probe at gamma = 0 (same physical point at every resolution)
        Vec2 t = d[n / 2] / d[n / 2].norm();
        return nl[n / 2].dot(Vec2{t.y, -t.x});
    };
    double a = normal_dev(128, 0.5);
    double b = normal_dev(256, 0.5);
    double c = normal_dev(512, 0.5);
    CHECK(std::abs(b - c) <= std::abs(a - c) + 1e-12);
    CHECK(std::abs(b - c) < 1e-3);
}

TEST_CASE("system validation") {
    PatchSystem sys = single_circle(64, 2.5);
    CHECK_THROWS_AS(validate_system(sys), InvalidSystem);
    sys.alpha = 0.5;
    sys.strengths = {1.0, 2.0};
    CHECK_THROWS_AS(validate_system(sys), InvalidSystem);
}
