#pragma once

#include "gridguard/decomposition.hpp"
#include "gridguard/visibility.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace gridguard {

// Sub-region of a source cell from which a target cell is area-visible,
// carved out of the cell by half-plane cuts: the two backward-extended
// window half-lines plus any shadow cuts the soundness certificate needed.
struct TempSubRegion {
  int source_id = 0;
  int target_id = 0;
  Segment via_edge;
  ConvexRegion region;
  HalfLine shl, ehl;  // wedge half-lines through the edge endpoints

  struct Cut {
    Line line;
    KeepSide keep;
  };
  std::vector<Cut> cuts;   // empty iff the region is the whole cell
  bool full_cell = false;
};

struct GuardingRegion {
  int id = 0;
  int source_id = 0;
  ConvexRegion region;
  // sorted cell ids; shared because many faces carry identical lists
  std::shared_ptr<const std::vector<int>> visible_list;

  const std::vector<int>& vl() const { return *visible_list; }
};

// Per-edge complete-visibility cache: Step 2 computes CVP once per distinct
// edge and reuses it across all targets and both incident cells.
class CvpCache {
 public:
  explicit CvpCache(const SimplePolygon& P) : polygon_(&P) {}
  const CompleteVisibilityRegion& get(const Segment& edge);

 private:
  const SimplePolygon* polygon_;
  std::map<std::pair<Point, Point>, CompleteVisibilityRegion> cache_;
  std::mutex mutex_;
};

// The region of `source` from which `target` is area-visible through
// `via_edge`, or empty. Gate: the whole target must be completely visible
// from the edge. The wedge through the edge endpoints is then clipped until
// every region corner exactly sees every target vertex (in a holeless
// polygon that certifies the whole region sees the whole target); when no
// sound region remains the result is empty. Throws EdgeNotOnSource.
std::optional<TempSubRegion> findtsr(const SimplePolygon& P, const Segment& via_edge,
                                     const ScRegion& source, const ScRegion& target,
                                     const CompleteVisibilityRegion& edge_cvp);

// Every non-empty tsr of the cell over (edge, target) pairs, plus the
// trivial self-tsr first. Deterministic: edges in ring order, targets by id.
std::vector<TempSubRegion> temp_sub_regions_for_cell(const SimplePolygon& P, const ScRegion& source,
                                                     const std::vector<ScRegion>& all_cells,
                                                     CvpCache& cvps);

// Partition of the source cell into guarding-regions: the overlay of all tsr
// boundary half-planes, each face tagged with the targets of the tsrs that
// contain it. Throws TsrSourceMismatch.
std::vector<GuardingRegion> decompose_scr(const ScRegion& source,
                                          const std::vector<TempSubRegion>& tsrs);

struct GuardingStats {
  size_t tsr_count = 0;
  double tsr_ms = 0;       // summed per-cell time in the tsr phase
  double decompose_ms = 0; // summed per-cell time in the decompose phase
};

// decompose_scr over all cells with globally unique, deterministic gr ids.
std::vector<GuardingRegion> build_all_guarding_regions(const SimplePolygon& P,
                                                       const std::vector<ScRegion>& cells,
                                                       GuardingStats* stats = nullptr);

}  // namespace gridguard
