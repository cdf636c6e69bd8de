#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphapatch/commands.hpp"
#include "alphapatch/errors.hpp"
#include "alphapatch/io.hpp"
#include "alphapatch/presets.hpp"

namespace {

struct SimulateOpts {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    std::vector<std::string> contour_files;
    std::vector<double> strengths;
};

int run_simulate(const SimulateOpts& opts) {
    ap::SimulationConfig cfg;
    ap::PatchSystem sys;
    if (!opts.preset.empty()) {
        ap::Preset p = ap::make_preset(opts.preset);
        cfg = p.config;
        sys = p.system;
    }
    if (!opts.config_path.empty()) cfg = ap::parse_config(opts.config_path);
    if (!opts.contour_files.empty()) {
        sys.contours.clear();
        for (const auto& path : opts.contour_files) {
            std::string text = ap::read_file(path);
            if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
                sys.contours.push_back(ap::contour_from_csv(text));
            else
                sys.contours.push_back(ap::contour_from_json(text));
        }
        sys.strengths = opts.strengths;
        if (sys.strengths.empty())
            sys.strengths.assign(sys.contours.size(), 1.0);
        sys.geometry = cfg.geometry;
        sys.alpha = cfg.alpha;
        sys.chord_floor_rel = cfg.chord_floor_rel;
        sys.normalization = cfg.normalization;
    }
    if (sys.contours.empty())
        throw ap::BadParameters("no initial data: pass --preset or --contour");
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;

    ap::RunResult result = ap::command_simulate(cfg, sys);
    std::printf("stop_reason=%s final_time=%s steps=%ld\n",
                ap::stop_reason_name(result.stop_reason).c_str(),
                ap::fmt17(result.final_state.time).c_str(),
                result.final_state.step_count);
    std::printf("artifacts written to %s/\n", cfg.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-patch contour dynamics toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    unsigned seed = 7;
    app.add_option("--threads", threads, "worker thread budget (evaluation is serial)");
    app.add_option("--seed", seed, "seed for randomized sweeps");

    SimulateOpts sim;
    auto* simulate = app.add_subcommand("simulate", "evolve a patch system");
    simulate->add_option("--config", sim.config_path, "JSON config file");
    simulate->add_option("--preset", sim.preset,
                         "steady-circle | ellipse-relaxation | "
                         "two-patch-approach | krzy-scenario");
    simulate->add_option("--out", sim.out_dir, "output directory");
    simulate->add_option("--contour", sim.contour_files,
                         "initial contour file (.json or .csv), repeatable");
    simulate->add_option("--strength", sim.strengths,
                         "patch strengths matching --contour order");

    ap::VerifyLemmasParams vl;
    auto* verify = app.add_subcommand("verify-lemmas",
                                      "check strip-velocity bounds by quadrature");
    std::string verify_out = "out";
    verify->add_option("--m", vl.m_list, "trapezoid slopes to test");
    verify->add_option("--beta-min", vl.beta_min, "smallest beta");
    verify->add_option("--beta-max", vl.beta_max, "largest beta");
    verify->add_option("--beta-count", vl.beta_count, "beta grid size");
    verify->add_option("--x-samples", vl.x_samples, "points per (m, beta, axis) cell");
    verify->add_option("--quad", vl.quad_n, "base quadrature resolution");
    verify->add_option("--out", verify_out, "output directory");

    ap::ScenarioParams sc;
    auto* scenario = app.add_subcommand("scenario",
                                        "wall-touching two-patch scenario");
    std::string scenario_config, scenario_out;
    scenario->add_option("--epsilon", sc.epsilon, "front position scale");
    scenario->add_option("--m", sc.m, "trapezoid slope");
    scenario->add_option("--a", sc.a, "trapezoid width");
    scenario->add_option("--beta", sc.beta, "kernel exponent parameter");
    scenario->add_option("--smoothing", sc.smoothing, "corner rounding radius");
    scenario->add_option("--quad", sc.quad_n, "sign-check quadrature resolution");
    scenario->add_option("--config", scenario_config, "JSON config file");
    scenario->add_option("--out", scenario_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate) return run_simulate(sim);
        if (*verify) {
            vl.seed = seed;
            std::string report = ap::command_verify_lemmas(vl);
            ap::write_file(verify_out + "/lemma_report.json", report);
            std::printf("%s", report.c_str());
            return 0;
        }
        if (*scenario) {
            ap::SimulationConfig cfg;
            if (!scenario_config.empty()) cfg = ap::parse_config(scenario_config);
            else {
                cfg.alpha = 2.0 * sc.beta;
                cfg.t_end = 0.05;
            }
            if (!scenario_out.empty()) cfg.out_dir = scenario_out;
            ap::ScenarioReport rep = ap::command_scenario(sc, cfg);
            std::printf("signs_ok=%d collision_time=%s stop_reason=%s\n",
                        rep.all_signs_ok ? 1 : 0,
                        ap::fmt17(rep.collision_time).c_str(),
                        ap::stop_reason_name(rep.run.stop_reason).c_str());
            std::printf("artifacts written to %s/\n", cfg.out_dir.c_str());
            return 0;
        }
    } catch (const ap::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
