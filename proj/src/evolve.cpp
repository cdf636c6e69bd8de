#include "alphapatch/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "alphapatch/errors.hpp"

namespace ap {

namespace {

constexpr double kLambdaDefectTol = 0.2;

PatchSystem displaced(const PatchSystem& sys, const std::vector<VectorField>& vel,
                      double dt) {
    PatchSystem out = sys;
    for (int k = 0; k < sys.n_patches(); ++k)
        for (int i = 0; i < sys.contours[k].n_nodes(); ++i)
            out.contours[k].points[i] += dt * vel[k][i];
    return out;
}

double max_speed(const VelocityBundle& bundle) {
    double m = 0.0;
    for (const auto& field : bundle.rhs)
        for (const auto& v : field) m = std::max(m, v.norm());
    return m;
}

double system_sup_arc_chord(const PatchSystem& sys) {
    double sup = 0.0;
    for (const auto& c : sys.contours)
        sup = std::max(sup, arc_chord(c, sys.chord_floor_rel).sup_value);
    return sup;
}

}  // namespace

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::TEnd: return "t_end";
        case StopReason::ArcChordBlowup: return "arc_chord";
        case StopReason::MinDistanceReached: return "min_distance";
        case StopReason::VelocityBlowup: return "velocity_blowup";
        case StopReason::StepRejectedStop: return "step_rejected";
    }
    return "unknown";
}

double choose_dt(const PatchSystem& sys, const VelocityBundle& bundle, double cfl,
                 double dt_max, double velocity_guard) {
    if (cfl <= 0.0 || cfl > 1.0) throw BadParameters("cfl must be in (0,1]");
    if (max_speed(bundle) > velocity_guard)
        throw VelocityBlowup("max |rhs| exceeds the overflow guard");
    double dt = dt_max;
    for (int k = 0; k < sys.n_patches(); ++k) {
        const int n = sys.contours[k].n_nodes();
        auto dx = spectral_derivative(sys.contours[k], 1);
        double mean_speed = 0.0;
        for (const auto& v : dx) mean_speed += v.norm();
        mean_speed /= n;
        const double spacing = mean_speed * grid_spacing(n);

        ScalarField r1(n), r2(n);
        for (int i = 0; i < n; ++i) { r1[i] = bundle.rhs[k][i].x; r2[i] = bundle.rhs[k][i].y; }
        auto dr1 = spectral_derivative(r1, 1);
        auto dr2 = spectral_derivative(r2, 1);
        for (int i = 0; i < n; ++i) {
            double denom = bundle.rhs[k][i].norm() +
                           std::hypot(dr1[i], dr2[i]) * spacing;
            denom = std::max(denom, 1e-14);
            dt = std::min(dt, cfl * spacing / denom);
        }
    }
    return dt;
}

PatchSystem enforce_parametrization(const PatchSystem& sys, double tol) {
    PatchSystem out = sys;
    for (auto& c : out.contours) {
        if (speed_defect(c) <= tol) continue;
        try {
            c = reparametrize_constant_speed(c, tol);
        } catch (const NoConvergence&) {
            // grid-scale roughness (e.g. a wall-touching contact) defeats pure
            // arclength equalization; alternate with mild high-mode damping
            for (int k = 0; k < 40 && speed_defect(c) > tol; ++k) {
                const int n = c.n_nodes();
                std::vector<double> f1(n), f2(n);
                for (int i = 0; i < n; ++i) {
                    f1[i] = c.points[i].x;
                    f2[i] = c.points[i].y;
                }
                f1 = spectral_filter(std::span<const double>(f1), 36.0, 8);
                f2 = spectral_filter(std::span<const double>(f2), 36.0, 8);
                for (int i = 0; i < n; ++i) c.points[i] = {f1[i], f2[i]};
                c = equalize_arclength_once(c);
            }
            if (speed_defect(c) > tol)
                throw NoConvergence("reparametrization stalled above tolerance "
                                    "even with high-mode damping");
        }
    }
    return out;
}

SimulationState step_rk4(const SimulationState& state, double dt,
                         const SimulationConfig& cfg) {
    if (dt < 0.0) throw BadParameters("dt must be nonnegative");
    if (dt == 0.0) return state;

    const PatchSystem& sys = state.system;
    const double sup_before = system_sup_arc_chord(sys);
    const double p = cfg.monitor_p > 0.0 ? cfg.monitor_p : default_monitor_p(sys.alpha);
    const double integrand = blowup_integrand(sys, p);

    auto b1 = rhs(sys, kLambdaDefectTol);
    auto b2 = rhs(displaced(sys, b1.rhs, dt / 2.0), kLambdaDefectTol);
    auto b3 = rhs(displaced(sys, b2.rhs, dt / 2.0), kLambdaDefectTol);
    auto b4 = rhs(displaced(sys, b3.rhs, dt), kLambdaDefectTol);

    SimulationState next = state;
    for (int k = 0; k < sys.n_patches(); ++k)
        for (int i = 0; i < sys.contours[k].n_nodes(); ++i)
            next.system.contours[k].points[i] +=
                (dt / 6.0) * (b1.rhs[k][i] + 2.0 * b2.rhs[k][i] + 2.0 * b3.rhs[k][i] +
                              b4.rhs[k][i]);
    next.system = enforce_parametrization(next.system, cfg.reproj_tol);
    next.time = state.time + dt;
    next.step_count = state.step_count + 1;
    next.cumulative_criterion = state.cumulative_criterion + dt * integrand;

    const double sup_after = system_sup_arc_chord(next.system);
    if (sup_after > cfg.step_reject_factor * sup_before)
        throw StepRejected("arc-chord sup grew by more than the allowed factor");
    return next;
}

RunResult run(const SimulationConfig& cfg, const PatchSystem& initial) {
    validate_config(cfg);
    validate_system(initial);

    RunResult result;
    SimulationState state;
    state.system = enforce_parametrization(initial, cfg.reproj_tol);

    DiagnosticsOptions opts{cfg.monitor_p, cfg.monitor_delta};
    const double sup_initial = system_sup_arc_chord(state.system);
    bool dist_inf = false;
    const double dist_initial = min_patch_distance(state.system, &dist_inf);
    double dist_stop = dist_inf ? 0.0 : dist_initial * cfg.min_distance_stop_factor;
    dist_stop = std::max(dist_stop, cfg.min_distance_stop_abs);

    std::vector<double> pending_snapshots = cfg.snapshot_times;
    std::sort(pending_snapshots.begin(), pending_snapshots.end());

    auto record = [&](const VelocityBundle& bundle) {
        DiagnosticsRecord rec = collect(state.system, bundle, opts);
        rec.time = state.time;
        rec.cumulative_criterion = state.cumulative_criterion;
        result.series.push_back(std::move(rec));
    };

    StopReason reason = StopReason::TEnd;
    {
        auto bundle0 = rhs(state.system, kLambdaDefectTol);
        record(bundle0);
    }
    while (!pending_snapshots.empty() && pending_snapshots.front() <= state.time) {
        result.snapshots.emplace_back(state.time, state.system);
        pending_snapshots.erase(pending_snapshots.begin());
    }
    while (state.time < cfg.t_end) {
        VelocityBundle bundle;
        double dt;
        try {
            bundle = rhs(state.system, kLambdaDefectTol);
            dt = choose_dt(state.system, bundle, cfg.cfl, cfg.dt_max, cfg.velocity_guard);
        } catch (const VelocityBlowup&) {
            reason = StopReason::VelocityBlowup;
            break;
        }
        dt = std::min(dt, cfg.t_end - state.time);
        try {
            state = step_rk4(state, dt, cfg);
        } catch (const StepRejected&) {
            reason = StopReason::StepRejectedStop;
            break;
        }

        while (!pending_snapshots.empty() && state.time >= pending_snapshots.front()) {
            result.snapshots.emplace_back(state.time, state.system);
            pending_snapshots.erase(pending_snapshots.begin());
        }
        if (state.step_count % cfg.output_cadence == 0) {
            auto bundle_now = rhs(state.system, kLambdaDefectTol);
            record(bundle_now);
        }

        const double sup_now = system_sup_arc_chord(state.system);
        if (sup_now > cfg.arc_chord_stop_factor * sup_initial) {
            reason = StopReason::ArcChordBlowup;
            break;
        }
        bool inf_now = false;
        const double dist_now = min_patch_distance(state.system, &inf_now);
        if (!inf_now && dist_now < dist_stop) {
            reason = StopReason::MinDistanceReached;
            break;
        }
    }

    // final record (skip duplicate when the loop just recorded this step)
    if (result.series.empty() || result.series.back().time != state.time) {
        auto bundle_final = rhs(state.system, kLambdaDefectTol);
        record(bundle_final);
    }
    if (result.snapshots.empty() || result.snapshots.back().first != state.time)
        result.snapshots.emplace_back(state.time, state.system);
    result.final_state = std::move(state);
    result.stop_reason = reason;
    return result;
}

}  // namespace ap
