#include "gridguard/pipeline.hpp"

#include "gridguard/svg.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace gridguard {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

SimplePolygon parse_polygon_text(std::string_view text, const std::string& origin) {
  std::vector<Point> verts;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(origin + ":" + std::to_string(line_no) + ": expected 'x y', got " +
                       std::to_string(tokens.size()) + " tokens");
    Scalar x, y;
    try {
      x = scalar_from_string(tokens[0]);
      y = scalar_from_string(tokens[1]);
    } catch (const ParseError& e) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
    verts.push_back(Point{std::move(x), std::move(y)});
  }
  if (verts.size() < 3)
    throw TooFewVertices(origin + ": polygon needs at least 3 vertices, got " +
                         std::to_string(verts.size()));
  return SimplePolygon::make(std::move(verts));
}

SimplePolygon parse_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open polygon file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon_text(buf.str(), path);
}

namespace {

const char* solver_name(SolverChoice s) {
  switch (s) {
    case SolverChoice::Greedy: return "greedy";
    case SolverChoice::Exact: return "exact";
    default: return "both";
  }
}

}  // namespace

RunReport run_polygon(const SimplePolygon& P, const RunConfig& cfg) {
  using clock = std::chrono::steady_clock;
  auto ms_between = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  auto start = clock::now();

  RunReport report;
  report.n = P.size();
  report.solver_name = solver_name(cfg.solver);

  auto t0 = clock::now();
  std::vector<ScRegion> cells = build_sc_regions(P, cfg.decomposition);
  auto t1 = clock::now();
  report.scr_count = cells.size();
  report.stage_ms.decompose = ms_between(t0, t1);

  GuardingStats gstats;
  std::vector<GuardingRegion> grs = build_all_guarding_regions(P, cells, &gstats);
  report.tsr_count = gstats.tsr_count;
  report.gr_count = grs.size();
  report.stage_ms.tsr = gstats.tsr_ms;
  report.stage_ms.guarding = gstats.decompose_ms;

  auto t2 = clock::now();
  SetCoverInstance inst = build_instance(cells, grs);
  std::optional<GuardSolution> greedy, exact;
  if (cfg.solver == SolverChoice::Greedy || cfg.solver == SolverChoice::Both)
    greedy = greedy_cover(inst);
  if (cfg.solver == SolverChoice::Exact || cfg.solver == SolverChoice::Both)
    exact = exact_cover(inst, cfg.exact_budget);
  auto t3 = clock::now();
  report.stage_ms.setcover = ms_between(t2, t3);

  if (greedy) report.greedy_size = greedy->size();
  if (exact) report.exact_size = exact->size();
  if (greedy && exact && exact->size() > 0)
    report.greedy_exact_ratio =
        static_cast<double>(greedy->size()) / static_cast<double>(exact->size());

  const GuardSolution& out_solution = exact ? *exact : *greedy;
  report.guards = out_solution.guards;

  if (cfg.verify_samples > 0) {
    CoverageReport cov = verify_cover(P, report.guards, cfg.verify_samples, cfg.seed);
    report.coverage = cov.fraction();
    report.uncovered_count = cov.witnesses.size();
  }
  auto t4 = clock::now();
  report.stage_ms.verify = ms_between(t3, t4);

  if (cfg.svg_path) render_svg(P, cells, grs, report.guards, *cfg.svg_path);
  if (cfg.json_path) {
    report.stage_ms.total = ms_between(start, clock::now());
    std::ofstream out(*cfg.json_path);
    if (!out) throw IoError("cannot open json output '" + *cfg.json_path + "'");
    out << report_json(report) << "\n";
  }
  report.stage_ms.total = ms_between(start, clock::now());
  return report;
}

RunReport run(const RunConfig& cfg) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  SimplePolygon P = parse_polygon(cfg.input_path);
  auto t1 = clock::now();
  RunReport report = run_polygon(P, cfg);
  report.stage_ms.parse = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

std::string report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["scr_count"] = r.scr_count;
  j["tsr_count"] = r.tsr_count;
  j["gr_count"] = r.gr_count;
  j["solver"] = r.solver_name;
  j["guard_count"] = r.guards.size();
  nlohmann::ordered_json guards = nlohmann::ordered_json::array();
  for (const auto& g : r.guards)
    guards.push_back({scalar_to_decimal(g.x, 12), scalar_to_decimal(g.y, 12)});
  j["guards"] = std::move(guards);
  j["coverage"] = r.coverage ? scalar_to_double(*r.coverage) : -1.0;
  nlohmann::ordered_json stages;
  stages["parse"] = r.stage_ms.parse;
  stages["decompose"] = r.stage_ms.decompose;
  stages["tsr"] = r.stage_ms.tsr;
  stages["guarding"] = r.stage_ms.guarding;
  stages["setcover"] = r.stage_ms.setcover;
  stages["verify"] = r.stage_ms.verify;
  stages["total"] = r.stage_ms.total;
  j["stage_ms"] = std::move(stages);
  return j.dump(2);
}

}  // namespace gridguard
