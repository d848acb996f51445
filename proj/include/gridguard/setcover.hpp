#pragma once

#include "gridguard/guarding.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace gridguard {

// Ground set = sc-region ids, one family per guarding-region (its visible
// list plus the guard point the region would contribute).
struct SetCoverInstance {
  std::vector<int> ground;  // sorted
  struct Family {
    int gr_id = 0;
    std::shared_ptr<const std::vector<int>> visible;
    Point guard;  // centroid of the guarding-region
  };
  std::vector<Family> families;
};

enum class SolverKind { Greedy, Exact };

struct GuardSolution {
  std::vector<int> chosen;   // gr ids, in pick order
  std::vector<Point> guards; // one per chosen gr
  std::vector<int> covered;  // sorted union of the chosen visible lists
  SolverKind solver = SolverKind::Greedy;
  size_t size() const { return chosen.size(); }
};

// Validates the feasibility seed (the union of visible lists must cover the
// ground); throws InfeasibleInstance otherwise, which would mean an upstream
// bug since every cell contributes itself to its own guarding-regions.
SetCoverInstance build_instance(const std::vector<ScRegion>& cells,
                                const std::vector<GuardingRegion>& grs);

// Classic greedy: repeatedly the family covering the most uncovered ids,
// ties to the smaller gr id. Size is within H(m) of the optimum.
GuardSolution greedy_cover(const SetCoverInstance& inst);

// Branch and bound over dominance-reduced families; optimal within the
// instance. Throws BudgetExceeded past `budget` node expansions.
GuardSolution exact_cover(const SetCoverInstance& inst, size_t budget = 10'000'000);

struct CoverageReport {
  size_t samples = 0;
  size_t covered = 0;
  std::vector<Point> witnesses;  // uncovered sample points

  Scalar fraction() const {
    if (samples == 0) return Scalar(1);
    return Scalar(static_cast<unsigned long>(covered)) / Scalar(static_cast<unsigned long>(samples));
  }
  bool full() const { return covered == samples; }
};

// Seeded rejection sampling over P; a sample counts as covered when some
// guard sees it. Guards must lie in P.
CoverageReport verify_cover(const SimplePolygon& P, const std::vector<Point>& guards, size_t samples,
                            uint64_t seed);

}  // namespace gridguard
