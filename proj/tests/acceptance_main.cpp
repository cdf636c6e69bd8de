// Acceptance checks: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "alphapatch/commands.hpp"
#include "alphapatch/diagnostics.hpp"
#include "alphapatch/dynamics.hpp"
#include "alphapatch/io.hpp"
#include "alphapatch/presets.hpp"
#include "alphapatch/singularity.hpp"

using namespace ap;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, double seconds) {
    std::printf("criterion %2d: %s — %s (%.2f s)\n", id, ok ? "PASS" : "FAIL",
                what.c_str(), seconds);
    if (!ok) ++failures;
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string workdir() {
    static std::string d = [] {
        std::string dir = (fs::temp_directory_path() / "ap_acceptance").string();
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }();
    return d;
}

bool same_artifacts(const std::string& a, const std::string& b,
                    const std::vector<std::string>& names) {
    for (const auto& name : names)
        if (read_file(a + "/" + name) != read_file(b + "/" + name)) return false;
    return true;
}

}  // namespace

int main() {
    // 1: sign-change thresholds of the combined strip-velocity coefficients
    {
        bool ok = false;
        double b1 = 0.0, b2 = 0.0;
        double secs = timed([&] {
            b1 = sign_threshold(1, 5.0);
            b2 = sign_threshold(2, 5.0);
        });
        ok = b1 >= 0.163 && b1 <= 0.173 && b2 >= 0.162 && b2 <= 0.172 &&
             secs < 1.0;
        report(1, ok,
               "coefficient thresholds " + fmt17(b1) + " / " + fmt17(b2) +
                   " inside [0.163,0.173] / [0.162,0.172]",
               secs);
    }

    // 2: kernel sign inequalities on 1e5 random quadrant samples
    {
        int violations = 0;
        double secs = timed([&] {
            std::mt19937 rng(2024);
            std::uniform_real_distribution<double> u(1e-3, 5.0);
            std::uniform_real_distribution<double> ub(0.02, 0.16);
            for (int t = 0; t < 100000; ++t) {
                Vec2 x{u(rng), u(rng)};
                Vec2 y{u(rng), u(rng)};
                if ((x - y).norm() < 1e-9) continue;
                double beta = ub(rng);
                auto k1 = kernel_components(1, x, y, beta);
                auto k2 = kernel_components(2, x, y, beta);
                double s1 = (y.y > x.y) ? 1.0 : (y.y < x.y ? -1.0 : 0.0);
                double s2 = (y.x > x.x) ? 1.0 : (y.x < x.x ? -1.0 : 0.0);
                if (s1 * (k1.parts[0] + k1.parts[1]) < 0.0) ++violations;
                if (s2 * (k2.parts[0] + k2.parts[3]) < 0.0) ++violations;
            }
        });
        report(2, violations == 0 && secs < 5.0,
               "kernel sign estimates, " + std::to_string(violations) +
                   " violations in 1e5 samples",
               secs);
    }

    // 3: steady circle run (artifacts kept for criterion 12)
    RunResult circle_run;
    SimulationConfig circle_cfg;
    {
        circle_cfg.alpha = 0.5;
        circle_cfg.n_nodes = 256;
        circle_cfg.t_end = 0.5;
        circle_cfg.out_dir = workdir() + "/circle_a";
        PatchSystem sys;
        sys.contours = {make_circle({0, 0}, 1.0, 256)};
        sys.strengths = {1.0};
        double secs =
            timed([&] { circle_run = command_simulate(circle_cfg, sys); });

        double area0 = circle_run.series.front().patches[0].area;
        double area_drift = 0.0, lambda_max = 0.0;
        for (const auto& rec : circle_run.series) {
            area_drift = std::max(area_drift,
                                  std::fabs(rec.patches[0].area - area0) / area0);
            lambda_max = std::max(lambda_max, rec.patches[0].lambda_linf);
        }
        double radial = 0.0;
        for (const auto& p : circle_run.final_state.system.contours[0].points)
            radial = std::max(radial, std::fabs(p.norm() - 1.0));
        bool ok = area_drift < 1e-6 && radial < 1e-4 && lambda_max < 1e-6 &&
                  secs < 120.0;
        report(3, ok,
               "steady circle to t=0.5: area drift " + fmt17(area_drift) +
                   ", radial dev " + fmt17(radial) + ", lambda sup " +
                   fmt17(lambda_max),
               secs);
    }

    // 4: arc-chord closed form on the unit circle
    {
        bool ok = false;
        double sup_err = 0.0, col_err = 0.0;
        double secs = timed([&] {
            Contour c = make_circle({0, 0}, 1.0, 256);
            ArcChordReport rep = arc_chord(c);
            sup_err = std::fabs(rep.sup_value - M_PI / 2.0);
            for (int i = 0; i < 256; ++i)
                col_err = std::max(col_err, std::fabs(rep.grid[i][128] - 1.0));
            ok = sup_err < 1e-10 && col_err < 1e-8;
        });
        report(4, ok,
               "unit circle sup F off pi/2 by " + fmt17(sup_err) +
                   ", eta=0 column off 1 by " + fmt17(col_err),
               secs);
    }

    // 5: boundary velocity vs interior point quadrature on an ellipse
    {
        bool ok = false;
        double err_mid = 0.0, err_coarse = 0.0, err_fine = 0.0;
        double secs = timed([&] {
            PatchSystem sys;
            sys.contours = {make_ellipse({0, 0}, 2.0, 1.0, 256)};
            sys.strengths = {1.0};
            sys.alpha = 0.5;
            auto nl = nl_velocity(sys, 0);
            auto d = spectral_derivative(sys.contours[0], 1);
            double scale = 0.0;
            for (const auto& v : nl) scale = std::max(scale, v.norm());
            auto mismatch = [&](int quad) {
                double worst = 0.0;
                for (int i = 0; i < 256; i += 8) {
                    Vec2 t = d[i] / d[i].norm();
                    Vec2 nrm{t.y, -t.x};
                    Vec2 x = sys.contours[0].points[i] - 1e-3 * nrm;
                    double pv = point_velocity(sys, x, quad).dot(nrm);
                    worst = std::max(worst, std::fabs(nl[i].dot(nrm) - pv));
                }
                return worst / scale;
            };
            err_coarse = mismatch(32);
            err_mid = mismatch(64);
            err_fine = mismatch(256);
            ok = err_mid < 0.02 && err_fine < err_coarse;
        });
        report(5, ok,
               "ellipse normal velocity mismatch " + fmt17(err_mid) +
                   " at quad 64; refines " + fmt17(err_coarse) + " -> " +
                   fmt17(err_fine),
               secs);
    }

    // 6: closed-form strip bound vs quadrature at random parameters
    {
        double worst_slack = 0.0;
        double secs = timed([&] {
            std::mt19937 rng(314);
            std::uniform_real_distribution<double> um(1.0, 8.0);
            std::uniform_real_distribution<double> ub(0.021, 0.159);
            std::uniform_real_distribution<double> ux(0.05, 0.5);
            std::uniform_real_distribution<double> uf(0.05, 0.95);
            worst_slack = 1e30;
            for (int t = 0; t < 20; ++t) {
                double m = um(rng), beta = ub(rng);
                double x1 = ux(rng);
                Vec2 x{x1, uf(rng) * m * x1};
                LemmaCheck lc = check_bad_bound(1, x, m, beta, 48);
                worst_slack = std::min(worst_slack, lc.slack);
            }
        });
        report(6, worst_slack >= -1e-3,
               "bad-strip bound holds at 20 random (m,beta,x); worst slack " +
                   fmt17(worst_slack),
               secs);
    }

    // 7: barrier trajectory formula and its ODE
    {
        bool ok = false;
        double secs = timed([&] {
            TrapezoidBarrier b;
            b.epsilon = 1.0 / 3.0;
            b.beta = 1.0 / 6.0;
            b.C = 1.0;
            bool values = std::fabs(b.collision_time() - 3.0) < 1e-12 &&
                          std::fabs(barrier_X(1.5, b) - 0.125) < 1e-12;
            TrapezoidBarrier def;
            const double T = def.collision_time();
            const double h = 1e-6;
            double residual = 0.0;
            for (int i = 1; i <= 100; ++i) {
                double t = T * i / 101.0;
                double xp =
                    (barrier_X(t + h, def) - barrier_X(t - h, def)) / (2.0 * h);
                double X = barrier_X(t, def);
                residual = std::max(
                    residual,
                    std::fabs(xp + def.C * std::pow(X, 1.0 - 2.0 * def.beta)));
            }
            ok = values && residual < 1e-8;
        });
        report(7, ok, "barrier T=3, X(1.5)=0.125, ODE residual < 1e-8 at 100 times",
               secs);
    }

    // 8: scenario t=0 velocity signs (artifacts kept for criteria 9 and 12)
    ScenarioReport scen;
    ScenarioParams scen_params;
    SimulationConfig scen_cfg;
    {
        scen_cfg.n_nodes = 256;
        scen_cfg.t_end = 0.05;
        scen_cfg.out_dir = workdir() + "/scenario_a";
        double secs =
            timed([&] { scen = command_scenario(scen_params, scen_cfg); });
        bool ok = scen.all_signs_ok && scen.u1_checks.size() == 10 &&
                  scen.u2_checks.size() == 10 && secs < 60.0;
        report(8, ok,
               "scenario t=0 signs: u1 < 0 on the front side, u2 > 0 on the "
               "sloped side, all 20 samples",
               secs);
    }

    // 9: odd symmetry preserved along the scenario run
    {
        double defect = 0.0;
        double secs = timed(
            [&] { defect = mirror_defect(scen.run.final_state.system); });
        report(9, defect < 1e-4,
               "mirror defect " + fmt17(defect) + " at t=" +
                   fmt17(scen.run.final_state.time),
               secs);
    }

    // 10: blow-up criterion monitor along the steady run
    {
        bool ok = false;
        double variation = 0.0, consistency = 0.0;
        double secs = timed([&] {
            double lo = 1e30, hi = 0.0;
            for (const auto& rec : circle_run.series) {
                lo = std::min(lo, rec.criterion_integrand);
                hi = std::max(hi, rec.criterion_integrand);
            }
            variation = (hi - lo) / hi;
            const auto& last = circle_run.series.back();
            consistency =
                std::fabs(last.cumulative_criterion -
                          last.criterion_integrand * last.time) /
                (last.criterion_integrand * last.time);
            ok = variation < 1e-6 && consistency < 1e-6;
        });
        report(10, ok,
               "integrand variation " + fmt17(variation) +
                   ", cumulative vs integrand*time off by " + fmt17(consistency),
               secs);
    }

    // 11: interpolation inequality on random nonnegative trig polynomials
    {
        double worst = -1e30;
        double secs = timed([&] {
            std::mt19937 rng(555);
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            const int n = 256;
            for (int trial = 0; trial < 100; ++trial) {
                double a0 = u(rng), a1 = u(rng), b1 = u(rng), a2 = u(rng),
                       b2 = u(rng);
                ScalarField f(n);
                for (int i = 0; i < n; ++i) {
                    double g = grid_gamma(i, n);
                    double q = a0 + a1 * std::cos(g) + b1 * std::sin(g) +
                               a2 * std::cos(2 * g) + b2 * std::sin(2 * g);
                    f[i] = q * q;
                }
                for (double sigma : {0.0, 0.5, 1.0})
                    worst = std::max(worst, interpolation_check(f, sigma));
            }
        });
        report(11, worst <= 1e-12,
               "interpolation inequality on 100 random squared trig polynomials, "
               "max violation " + fmt17(worst),
               secs);
    }

    // 12: byte-identical artifacts on repeated runs of criteria 3 and 8
    {
        bool ok = false;
        double secs = timed([&] {
            SimulationConfig c2 = circle_cfg;
            c2.out_dir = workdir() + "/circle_b";
            PatchSystem sys;
            sys.contours = {make_circle({0, 0}, 1.0, 256)};
            sys.strengths = {1.0};
            command_simulate(c2, sys);

            SimulationConfig s2 = scen_cfg;
            s2.out_dir = workdir() + "/scenario_b";
            command_scenario(scen_params, s2);

            ok = same_artifacts(circle_cfg.out_dir, c2.out_dir,
                                {"diagnostics.csv", "final.json", "summary.json",
                                 "snapshot_000.json"}) &&
                 same_artifacts(scen_cfg.out_dir, s2.out_dir,
                                {"diagnostics.csv", "final.json", "summary.json",
                                 "containment.csv", "scenario_report.json"});
        });
        report(12, ok, "repeated steady-circle and scenario runs byte-identical",
               secs);
    }

    fs::remove_all(workdir());
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
