#include "alphapatch/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "alphapatch/errors.hpp"
#include "alphapatch/io.hpp"

namespace ap {

using nlohmann::json;

namespace {

std::string geometry_name(Geometry g) {
    return g == Geometry::FullPlane ? "full_plane" : "half_plane";
}

json system_to_json(const PatchSystem& sys, double time) {
    json j;
    j["schema"] = "alphapatch-snapshot-v1";
    j["time"] = fmt17(time);
    j["geometry"] = geometry_name(sys.geometry);
    j["alpha"] = fmt17(sys.alpha);
    json strengths = json::array();
    for (double s : sys.strengths) strengths.push_back(fmt17(s));
    j["strengths"] = strengths;
    json contours = json::array();
    for (const auto& c : sys.contours)
        contours.push_back(json::parse(contour_to_json(c, time)));
    j["contours"] = contours;
    return j;
}

std::string snapshot_name(int idx) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snapshot_%03d.json", idx);
    return buf;
}

}  // namespace

RunResult command_simulate(const SimulationConfig& cfg, const PatchSystem& sys) {
    RunResult result = run(cfg, sys);
    const std::string dir = cfg.out_dir + "/";
    write_file(dir + "diagnostics.csv",
               diagnostics_to_csv(result.series,
                                  static_cast<int>(sys.contours.size())));
    for (size_t i = 0; i < result.snapshots.size(); ++i) {
        const auto& [t, snap] = result.snapshots[i];
        write_file(dir + snapshot_name(static_cast<int>(i)),
                   system_to_json(snap, t).dump(2) + "\n");
    }
    write_file(dir + "final.json",
               system_to_json(result.final_state.system,
                              result.final_state.time).dump(2) + "\n");
    write_file(dir + "summary.json", run_summary_json(result, cfg));
    return result;
}

LemmaCheck check_bad_bound(int axis, Vec2 x, double m, double beta, int quad_n,
                           double L) {
    LemmaCheck lc;
    lc.bound = bad_bound(axis, x, m, beta);
    std::vector<PatchRegion> strip = {
        {{{0.0, 0.0}, {L, 0.0}, {L, L}, {0.0, L}}, 1.0}};
    lc.quadrature = region_velocity(axis, VelocityPart::Bad, x, strip, beta, quad_n);
    // axis 1: quadrature <= bound; axis 2: quadrature >= bound
    lc.slack = (axis == 1) ? lc.bound - lc.quadrature : lc.quadrature - lc.bound;
    return lc;
}

std::string command_verify_lemmas(const VerifyLemmasParams& params) {
    if (params.beta_count < 1 || params.x_samples < 1)
        throw BadParameters("beta_count and x_samples must be positive");
    std::mt19937 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.05, 0.95);

    json report;
    report["schema"] = "alphapatch-lemmas-v1";
    report["quad_n"] = params.quad_n;
    json entries = json::array();
    json thresholds = json::array();

    for (double m : params.m_list) {
        for (int axis = 1; axis <= 2; ++axis) {
            json th;
            th["m"] = fmt17(m);
            th["axis"] = axis;
            try {
                th["beta_threshold"] = fmt17(sign_threshold(axis, m));
            } catch (const Error& e) {
                th["error"] = e.what();
            }
            thresholds.push_back(th);
        }
        for (int bi = 0; bi < params.beta_count; ++bi) {
            const double beta =
                params.beta_count == 1
                    ? params.beta_min
                    : params.beta_min + (params.beta_max - params.beta_min) * bi /
                                            (params.beta_count - 1);
            for (int axis = 1; axis <= 2; ++axis) {
                for (int s = 0; s < params.x_samples; ++s) {
                    Vec2 x;
                    if (axis == 1) {
                        x.x = 0.1 + 0.9 * unit(rng);
                        x.y = m * x.x * unit(rng);
                    } else {
                        x.y = 0.1 + 0.9 * unit(rng);
                        x.x = x.y / m * unit(rng);
                    }
                    json row;
                    row["m"] = fmt17(m);
                    row["beta"] = fmt17(beta);
                    row["axis"] = axis;
                    row["x"] = {fmt17(x.x), fmt17(x.y)};
                    try {
                        LemmaCheck lc = check_bad_bound(axis, x, m, beta,
                                                        params.quad_n);
                        row["bound"] = fmt17(lc.bound);
                        row["quadrature"] = fmt17(lc.quadrature);
                        row["slack"] = fmt17(lc.slack);
                        row["ok"] = lc.slack >= -1e-3;
                    } catch (const Error& e) {
                        row["error"] = e.what();
                        row["ok"] = false;
                    }
                    entries.push_back(row);
                }
            }
        }
    }
    int failures = 0;
    for (const auto& row : entries)
        if (!row.value("ok", false)) ++failures;
    report["thresholds"] = thresholds;
    report["checks"] = entries;
    report["n_checks"] = entries.size();
    report["n_failures"] = failures;
    return report.dump(2) + "\n";
}

ScenarioReport command_scenario(const ScenarioParams& params,
                                SimulationConfig cfg) {
    cfg.alpha = 2.0 * params.beta;
    cfg.geometry = Geometry::HalfPlane;
    ScenarioReport report;

    PatchSystem sys = build_scenario_initial_data(
        params.epsilon, params.m, params.a, cfg.n_nodes, params.smoothing,
        cfg.alpha);

    TrapezoidBarrier barrier;
    barrier.epsilon = params.epsilon;
    barrier.m = params.m;
    barrier.a = params.a;
    barrier.beta = params.beta;
    report.collision_time = barrier.collision_time();

    const double X0 = 3.0 * params.epsilon;
    std::vector<PatchRegion> regions = {{sys.contours[0].points, 1.0}};
    report.all_signs_ok = true;
    for (int j = 0; j < params.sign_samples; ++j) {
        // front side of the trapezoid: the vertical segment x1 = X(0)
        Vec2 x{X0, params.m * X0 * (j + 0.5) / params.sign_samples};
        ScenarioSignCheck chk;
        chk.point = x;
        chk.value = region_velocity(1, VelocityPart::Good, x, regions,
                                    params.beta, params.quad_n) +
                    region_velocity(1, VelocityPart::Bad, x, regions,
                                    params.beta, params.quad_n);
        chk.ok = chk.value < 0.0;
        report.all_signs_ok = report.all_signs_ok && chk.ok;
        report.u1_checks.push_back(chk);
    }
    for (int j = 0; j < params.sign_samples; ++j) {
        // sloped side x2 = m x1, between the front and the far corner
        double x1 = X0 + (params.a - X0) * (j + 0.5) / params.sign_samples;
        Vec2 x{x1, params.m * x1};
        ScenarioSignCheck chk;
        chk.point = x;
        chk.value = region_velocity(2, VelocityPart::Good, x, regions,
                                    params.beta, params.quad_n) +
                    region_velocity(2, VelocityPart::Bad, x, regions,
                                    params.beta, params.quad_n);
        chk.ok = chk.value > 0.0;
        report.all_signs_ok = report.all_signs_ok && chk.ok;
        report.u2_checks.push_back(chk);
    }

    if (cfg.snapshot_times.empty()) {
        for (int i = 0; i <= 5; ++i)
            cfg.snapshot_times.push_back(cfg.t_end * i / 5.0);
    }
    report.run = command_simulate(cfg, sys);

    std::string cont_csv = "time,X,contained,margin\n";
    for (const auto& [t, snap] : report.run.snapshots) {
        if (t > report.collision_time) break;
        double X = barrier_X(t, barrier);
        ContainmentResult cr = barrier_containment(snap, barrier, t);
        report.containment_times.push_back(t);
        report.containment_X.push_back(X);
        report.containment.push_back(cr);
        cont_csv += fmt17(t) + ',' + fmt17(X) + ',' +
                    (cr.contained ? "1" : "0") + ',' + fmt17(cr.margin) + '\n';
    }

    const std::string dir = cfg.out_dir + "/";
    write_file(dir + "containment.csv", cont_csv);

    json j;
    j["schema"] = "alphapatch-scenario-v1";
    j["epsilon"] = fmt17(params.epsilon);
    j["m"] = fmt17(params.m);
    j["a"] = fmt17(params.a);
    j["beta"] = fmt17(params.beta);
    j["collision_time"] = fmt17(report.collision_time);
    auto checks_json = [](const std::vector<ScenarioSignCheck>& checks) {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"x", {fmt17(c.point.x), fmt17(c.point.y)}},
                           {"value", fmt17(c.value)},
                           {"ok", c.ok}});
        return arr;
    };
    j["u1_checks"] = checks_json(report.u1_checks);
    j["u2_checks"] = checks_json(report.u2_checks);
    j["all_signs_ok"] = report.all_signs_ok;
    j["stop_reason"] = stop_reason_name(report.run.stop_reason);
    j["final_time"] = fmt17(report.run.final_state.time);
    json cont = json::array();
    for (size_t i = 0; i < report.containment.size(); ++i)
        cont.push_back({{"time", fmt17(report.containment_times[i])},
                        {"X", fmt17(report.containment_X[i])},
                        {"contained", report.containment[i].contained},
                        {"margin", fmt17(report.containment[i].margin)}});
    j["containment"] = cont;
    write_file(dir + "scenario_report.json", j.dump(2) + "\n");
    return report;
}

}  // namespace ap
