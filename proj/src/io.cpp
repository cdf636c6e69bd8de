#include "alphapatch/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alphapatch/errors.hpp"

namespace ap {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string contour_to_csv(const Contour& c) {
    std::string out = "gamma,x1,x2\n";
    for (int i = 0; i < c.n_nodes(); ++i) {
        out += fmt17(grid_gamma(i, c.n_nodes()));
        out += ',';
        out += fmt17(c.points[i].x);
        out += ',';
        out += fmt17(c.points[i].y);
        out += '\n';
    }
    return out;
}

Contour contour_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string lineStr;
    std::vector<Vec2> pts;
    bool header = true;
    while (std::getline(in, lineStr)) {
        if (lineStr.empty()) continue;
        if (header) { header = false; continue; }
        std::istringstream ls(lineStr);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != 3) throw ParseError("contour CSV row needs 3 columns");
        pts.push_back({vals[1], vals[2]});
    }
    return make_contour(std::move(pts));
}

std::string contour_to_json(const Contour& c, double time) {
    json j;
    j["label"] = c.label;
    j["n_nodes"] = c.n_nodes();
    std::vector<std::string> flat;
    flat.reserve(2 * c.n_nodes());
    for (const auto& p : c.points) {
        flat.push_back(fmt17(p.x));
        flat.push_back(fmt17(p.y));
    }
    j["points"] = flat;
    j["metadata"] = {{"time", fmt17(time)}, {"schema", "alphapatch-contour-v1"}};
    return j.dump(2) + "\n";
}

Contour contour_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("contour JSON parse error: ") + e.what());
    }
    const int n = j.at("n_nodes").get<int>();
    auto flat = j.at("points").get<std::vector<std::string>>();
    if (static_cast<int>(flat.size()) != 2 * n)
        throw ParseError("contour JSON points length mismatch");
    std::vector<Vec2> pts(n);
    for (int i = 0; i < n; ++i)
        pts[i] = {std::stod(flat[2 * i]), std::stod(flat[2 * i + 1])};
    std::string label = j.value("label", "");
    return make_contour(std::move(pts), label);
}

std::string diagnostics_to_csv(const std::vector<DiagnosticsRecord>& series,
                               int n_patches) {
    std::string out = "# alphapatch-diagnostics v1\n";
    out += "time";
    for (int k = 0; k < n_patches; ++k) {
        std::string s = std::to_string(k);
        out += ",area_" + s + ",supF_" + s + ",dx_linf_" + s + ",d2x_l2_" + s +
               ",d2x_lp_" + s + ",d3x_l2_" + s + ",dx_holder_" + s +
               ",lambda_linf_" + s + ",dlambda_linf_" + s + ",mirror_defect_" + s;
    }
    out += ",min_distance,criterion_integrand,cumulative_criterion\n";
    for (const auto& rec : series) {
        out += fmt17(rec.time);
        for (const auto& pd : rec.patches) {
            out += ',' + fmt17(pd.area) + ',' + fmt17(pd.sup_arc_chord) + ',' +
                   fmt17(pd.dx_linf) + ',' + fmt17(pd.d2x_l2) + ',' +
                   fmt17(pd.d2x_lp) + ',' + fmt17(pd.d3x_l2) + ',' +
                   fmt17(pd.dx_holder) + ',' + fmt17(pd.lambda_linf) + ',' +
                   fmt17(pd.dlambda_linf) + ',' + fmt17(pd.mirror_defect);
        }
        out += ',' + (rec.min_distance_infinite ? std::string("inf")
                                                : fmt17(rec.min_distance));
        out += ',' + fmt17(rec.criterion_integrand);
        out += ',' + fmt17(rec.cumulative_criterion);
        out += '\n';
    }
    return out;
}

std::string run_summary_json(const RunResult& result, const SimulationConfig& cfg) {
    double peak_supF = 0.0;
    double min_dist = std::numeric_limits<double>::infinity();
    bool any_dist = false;
    for (const auto& rec : result.series) {
        for (const auto& pd : rec.patches) peak_supF = std::max(peak_supF, pd.sup_arc_chord);
        if (!rec.min_distance_infinite) {
            any_dist = true;
            min_dist = std::min(min_dist, rec.min_distance);
        }
    }
    json j;
    j["schema"] = "alphapatch-summary-v1";
    j["stop_reason"] = stop_reason_name(result.stop_reason);
    j["final_time"] = fmt17(result.final_state.time);
    j["steps"] = result.final_state.step_count;
    j["final_criterion"] = fmt17(result.final_state.cumulative_criterion);
    j["peak_sup_arc_chord"] = fmt17(peak_supF);
    j["min_distance"] = any_dist ? fmt17(min_dist) : "inf";
    j["alpha"] = fmt17(cfg.alpha);
    j["n_nodes"] = cfg.n_nodes;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ap
