#pragma once

#include <string>
#include <vector>

#include "alphapatch/diagnostics.hpp"
#include "alphapatch/evolve.hpp"

namespace ap {

// Round-trip exact float formatting (17 significant digits).
std::string fmt17(double v);

// columns: gamma, x1, x2
std::string contour_to_csv(const Contour& c);
Contour contour_from_csv(const std::string& text);

// {label, n_nodes, points (flattened), metadata}
std::string contour_to_json(const Contour& c, double time = 0.0);
Contour contour_from_json(const std::string& text);

std::string diagnostics_to_csv(const std::vector<DiagnosticsRecord>& series,
                               int n_patches);

std::string run_summary_json(const RunResult& result, const SimulationConfig& cfg);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace ap
