#include "gridguard/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gridguard;

int main(int argc, char** argv) {
  CLI::App app{"gridguard: grid-restricted point guarding of a simple polygon"};

  RunConfig cfg;
  std::string strategy = "paper1";
  std::string solver = "greedy";
  std::string svg_path, json_path;

  app.add_option("--input", cfg.input_path, "polygon file (one 'x y' vertex per line)")->required();
  app.add_option("--strategy", strategy, "decomposition strategy")
      ->check(CLI::IsMember({"paper1", "paper2", "trapezoid", "grid"}));
  app.add_option("--k", cfg.decomposition.k, "refinement iterations for paper1/paper2 (max 3)");
  app.add_option("--grid-res", cfg.decomposition.grid_resolution, "grid subdivisions per axis");
  app.add_option("--solver", solver, "set cover solver")->check(CLI::IsMember({"greedy", "exact", "both"}));
  app.add_option("--verify-samples", cfg.verify_samples, "coverage verification sample count (0 disables)");
  app.add_option("--seed", cfg.seed, "random seed for verification sampling");
  app.add_option("--svg", svg_path, "write an SVG rendering of the run");
  app.add_option("--json", json_path, "write the JSON report");
  app.add_option("--max-cells", cfg.decomposition.max_cells, "decomposition cell budget");
  app.add_option("--exact-budget", cfg.exact_budget, "exact solver node expansion budget");

  CLI11_PARSE(app, argc, argv);

  if (strategy == "paper1") cfg.decomposition.strategy = Strategy::Paper1;
  else if (strategy == "paper2") cfg.decomposition.strategy = Strategy::Paper2;
  else if (strategy == "trapezoid") cfg.decomposition.strategy = Strategy::Trapezoid;
  else cfg.decomposition.strategy = Strategy::Grid;

  if (solver == "greedy") cfg.solver = SolverChoice::Greedy;
  else if (solver == "exact") cfg.solver = SolverChoice::Exact;
  else cfg.solver = SolverChoice::Both;

  if (!svg_path.empty()) cfg.svg_path = svg_path;
  if (!json_path.empty()) cfg.json_path = json_path;

  try {
    RunReport report = run(cfg);
    std::cout << report_json(report) << "\n";
    if (report.coverage && *report.coverage != Scalar(1)) {
      std::cerr << "coverage verification failed: " << report.uncovered_count
                << " uncovered samples\n";
      return 4;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
