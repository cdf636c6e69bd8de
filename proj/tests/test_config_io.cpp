#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

#include "alphapatch/commands.hpp"
#include "alphapatch/config.hpp"
#include "alphapatch/errors.hpp"
#include "alphapatch/io.hpp"
#include "alphapatch/presets.hpp"

using namespace ap;

TEST_CASE("minimal config takes defaults") {
    SimulationConfig cfg = parse_config_text(R"({"alpha": 0.5, "t_end": 0.5})");
    CHECK(cfg.alpha == 0.5);
    CHECK(cfg.t_end == 0.5);
    CHECK(cfg.n_nodes == 256);
    CHECK(cfg.cfl == 0.5);
    CHECK(cfg.geometry == Geometry::FullPlane);
    CHECK(cfg.out_dir == "out");
    CHECK(cfg.snapshot_times.empty());

    SimulationConfig half = parse_config_text(
        R"({"geometry": "half_plane", "snapshot_times": [0.0, 0.1]})");
    CHECK(half.geometry == Geometry::HalfPlane);
    REQUIRE(half.snapshot_times.size() == 2);
    CHECK(half.snapshot_times[1] == 0.1);
}

TEST_CASE("config validation names the offending fields") {
    try {
        parse_config_text(R"({"alpha": 2.5})");
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
    // all violations reported together
    try {
        parse_config_text(R"({"alpha": 2.5, "cfl": 1.5})");
        CHECK(false);
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("alpha") != std::string::npos);
        CHECK(msg.find("cfl") != std::string::npos);
    }
}

TEST_CASE("unknown keys get a nearest-key suggestion") {
    try {
        parse_config_text(R"({"alpa": 0.5})");
        CHECK(false);
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("alpa") != std::string::npos);
        CHECK(msg.find("\"alpha\"") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text("{not json"), ParseError);
    CHECK_THROWS_AS(parse_config_text(R"({"geometry": "torus"})"), ParseError);
}

TEST_CASE("fmt17 round-trips doubles exactly") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double v = u(rng) * std::pow(10.0, static_cast<int>(20 * u(rng)));
        CHECK(std::stod(fmt17(v)) == v);
    }
    CHECK(std::stod(fmt17(M_PI)) == M_PI);
    CHECK(fmt17(1.0) == "1");
}

TEST_CASE("contour CSV round-trip") {
    Contour c = make_circle({0.3, -1.2}, 2.0, 64);
    std::string csv = contour_to_csv(c);
    CHECK(csv.rfind("gamma,x1,x2\n", 0) == 0);
    Contour back = contour_from_csv(csv);
    REQUIRE(back.n_nodes() == 64);
    for (int i = 0; i < 64; ++i) {
        CHECK(back.points[i].x == c.points[i].x);
        CHECK(back.points[i].y == c.points[i].y);
    }
    CHECK_THROWS_AS(contour_from_csv("gamma,x1,x2\n0,1\n"), ParseError);
}

TEST_CASE("contour JSON round-trip") {
    Contour c = make_circle({-0.5, 0.7}, 1.3, 32, "probe");
    Contour back = contour_from_json(contour_to_json(c, 0.25));
    REQUIRE(back.n_nodes() == 32);
    CHECK(back.label == "probe");
    for (int i = 0; i < 32; ++i) {
        CHECK(back.points[i].x == c.points[i].x);
        CHECK(back.points[i].y == c.points[i].y);
    }
    CHECK_THROWS_AS(contour_from_json("{"), ParseError);
    CHECK_THROWS_AS(contour_from_json(R"({"n_nodes": 4, "points": ["0"]})"),
                    ParseError);
}

TEST_CASE("diagnostics CSV layout") {
    SimulationConfig cfg;
    cfg.t_end = 0.0;
    PatchSystem sys;
    sys.contours = {make_circle({0, 0}, 1.0, 128)};
    sys.strengths = {1.0};
    RunResult r = run(cfg, sys);
    std::string csv = diagnostics_to_csv(r.series, 1);
    CHECK(csv.rfind("# alphapatch-diagnostics v1\n", 0) == 0);
    CHECK(csv.find("time,area_0,supF_0") != std::string::npos);
    CHECK(csv.find(",min_distance,criterion_integrand,cumulative_criterion\n") !=
          std::string::npos);
    CHECK(csv.find(",inf,") != std::string::npos);  // single patch
}

TEST_CASE("run summary fields") {
    SimulationConfig cfg;
    cfg.t_end = 0.01;
    cfg.n_nodes = 64;
    PatchSystem sys;
    sys.contours = {make_circle({0, 0}, 1.0, 64)};
    sys.strengths = {1.0};
    RunResult r = run(cfg, sys);
    auto j = nlohmann::json::parse(run_summary_json(r, cfg));
    CHECK(j["schema"] == "alphapatch-summary-v1");
    CHECK(j["stop_reason"] == "t_end");
    CHECK(std::stod(j["final_time"].get<std::string>()) == r.final_state.time);
    CHECK(j["steps"].get<int>() == r.final_state.step_count);
    CHECK(j["n_nodes"] == 64);
}

TEST_CASE("simulation artifacts are byte deterministic") {
    namespace fs = std::filesystem;
    Preset p = make_preset("steady-circle");
    p.config.t_end = 0.02;
    p.config.n_nodes = 128;
    p.system.contours = {make_circle({0, 0}, 1.0, 128)};

    const std::string d1 = (fs::temp_directory_path() / "ap_io_run1").string();
    const std::string d2 = (fs::temp_directory_path() / "ap_io_run2").string();
    fs::remove_all(d1);
    fs::remove_all(d2);
    p.config.out_dir = d1;
    command_simulate(p.config, p.system);
    p.config.out_dir = d2;
    command_simulate(p.config, p.system);

    for (const char* name : {"diagnostics.csv", "final.json", "summary.json",
                             "snapshot_000.json"}) {
        CHECK(read_file(d1 + "/" + name) == read_file(d2 + "/" + name));
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("presets resolve and unknown names are rejected") {
    for (const char* name :
         {"steady-circle", "ellipse-relaxation", "two-patch-approach"}) {
        Preset p = make_preset(name);
        CHECK_NOTHROW(validate_config(p.config));
        CHECK_FALSE(p.system.contours.empty());
    }
    CHECK_THROWS_AS(make_preset("no-such-preset"), BadParameters);
}
