#pragma once

#include "gridguard/setcover.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gridguard {

enum class SolverChoice { Greedy, Exact, Both };

struct RunConfig {
  std::string input_path;
  DecompositionConfig decomposition;
  SolverChoice solver = SolverChoice::Greedy;
  size_t verify_samples = 10000;
  uint64_t seed = 1;
  std::optional<std::string> svg_path;
  std::optional<std::string> json_path;
  size_t exact_budget = 10'000'000;
};

struct StageTimes {
  double parse = 0, decompose = 0, tsr = 0, guarding = 0, setcover = 0, verify = 0, total = 0;
};

struct RunReport {
  size_t n = 0;
  size_t scr_count = 0;
  size_t tsr_count = 0;
  size_t gr_count = 0;
  std::string solver_name;  // "greedy" | "exact" | "both"
  std::optional<size_t> greedy_size;
  std::optional<size_t> exact_size;
  std::optional<double> greedy_exact_ratio;  // only in "both" mode
  std::vector<Point> guards;                 // the reported solution
  std::optional<Scalar> coverage;            // absent when verify_samples == 0
  size_t uncovered_count = 0;
  StageTimes stage_ms;
};

// Text polygon format: '#' starts a comment, every other non-blank line is
// "x y" with decimal or p/q literals, vertices in boundary order, first
// vertex not repeated. Clockwise input is reversed.
SimplePolygon parse_polygon_text(std::string_view text, const std::string& origin);
SimplePolygon parse_polygon(const std::string& path);

// Algorithm pipeline: decompose, find temp-sub-regions, build guarding
// regions, solve set cover, optionally verify and emit SVG/JSON.
RunReport run_polygon(const SimplePolygon& P, const RunConfig& cfg);
RunReport run(const RunConfig& cfg);

// Fixed-key-order JSON rendering of a report. All fields are deterministic
// for a fixed config and seed except the stage_ms timings.
std::string report_json(const RunReport& report);

}  // namespace gridguard
