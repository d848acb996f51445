#include "gridguard/setcover.hpp"

#include "gridguard/oracle.hpp"
#include "gridguard/parallel.hpp"

#include <algorithm>
#include <map>

namespace gridguard {

SetCoverInstance build_instance(const std::vector<ScRegion>& cells,
                                const std::vector<GuardingRegion>& grs) {
  SetCoverInstance inst;
  inst.ground.reserve(cells.size());
  for (const auto& c : cells) inst.ground.push_back(c.id);
  std::sort(inst.ground.begin(), inst.ground.end());

  inst.families.reserve(grs.size());
  for (const auto& gr : grs)
    inst.families.push_back({gr.id, gr.visible_list, gr.region.centroid()});

  std::vector<char> hit(inst.ground.empty() ? 0 : static_cast<size_t>(inst.ground.back()) + 1, 0);
  for (const auto& f : inst.families)
    for (int id : *f.visible)
      if (id >= 0 && static_cast<size_t>(id) < hit.size()) hit[static_cast<size_t>(id)] = 1;
  for (int id : inst.ground) {
    if (!hit[static_cast<size_t>(id)])
      throw InfeasibleInstance("ground element " + std::to_string(id) +
                               " is not covered by any visible list");
  }
  return inst;
}

namespace {

// bitmask machinery over the ground set
struct MaskView {
  std::vector<uint64_t> bits;
  size_t count = 0;

  explicit MaskView(size_t words) : bits(words, 0) {}
  void set(size_t i) { bits[i >> 6] |= uint64_t(1) << (i & 63); }
  bool subset_of(const MaskView& o) const {
    for (size_t w = 0; w < bits.size(); ++w)
      if (bits[w] & ~o.bits[w]) return false;
    return true;
  }
};

size_t popcount_and_not(const std::vector<uint64_t>& a, const std::vector<uint64_t>& covered) {
  size_t c = 0;
  for (size_t w = 0; w < a.size(); ++w) c += static_cast<size_t>(__builtin_popcountll(a[w] & ~covered[w]));
  return c;
}

struct Compiled {
  std::map<int, size_t> index_of;      // ground id -> bit
  std::vector<MaskView> masks;         // per family
  size_t words = 0;
  size_t m = 0;
};

Compiled compile(const SetCoverInstance& inst) {
  Compiled c;
  c.m = inst.ground.size();
  c.words = (c.m + 63) / 64;
  for (size_t i = 0; i < inst.ground.size(); ++i) c.index_of[inst.ground[i]] = i;
  c.masks.reserve(inst.families.size());
  for (const auto& f : inst.families) {
    MaskView m(c.words);
    for (int id : *f.visible) {
      auto it = c.index_of.find(id);
      if (it != c.index_of.end()) {
        m.set(it->second);
        ++m.count;
      }
    }
    c.masks.push_back(std::move(m));
  }
  return c;
}

GuardSolution finalize(const SetCoverInstance& inst, std::vector<size_t> picked, SolverKind kind) {
  GuardSolution sol;
  sol.solver = kind;
  for (size_t fi : picked) {
    sol.chosen.push_back(inst.families[fi].gr_id);
    sol.guards.push_back(inst.families[fi].guard);
    for (int id : *inst.families[fi].visible) sol.covered.push_back(id);
  }
  std::sort(sol.covered.begin(), sol.covered.end());
  sol.covered.erase(std::unique(sol.covered.begin(), sol.covered.end()), sol.covered.end());
  return sol;
}

std::vector<size_t> greedy_pick(const SetCoverInstance& inst, const Compiled& c) {
  std::vector<uint64_t> covered(c.words, 0);
  size_t covered_count = 0;
  std::vector<size_t> picked;
  while (covered_count < c.m) {
    size_t best = SIZE_MAX, best_gain = 0;
    for (size_t fi = 0; fi < c.masks.size(); ++fi) {
      size_t gain = popcount_and_not(c.masks[fi].bits, covered);
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 && best != SIZE_MAX &&
           inst.families[fi].gr_id < inst.families[best].gr_id)) {
        best = fi;
        best_gain = gain;
      }
    }
    if (best == SIZE_MAX || best_gain == 0)
      throw InfeasibleInstance("greedy stalled; instance does not cover the ground");
    picked.push_back(best);
    for (size_t w = 0; w < c.words; ++w) covered[w] |= c.masks[best].bits[w];
    covered_count += best_gain;
  }
  return picked;
}

}  // namespace

GuardSolution greedy_cover(const SetCoverInstance& inst) {
  Compiled c = compile(inst);
  return finalize(inst, greedy_pick(inst, c), SolverKind::Greedy);
}

GuardSolution exact_cover(const SetCoverInstance& inst, size_t budget) {
  Compiled c = compile(inst);

  // dominance reduction: drop any family whose mask is contained in another
  // (ties keep the smaller gr id)
  std::vector<size_t> order(c.masks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<char> dominated(c.masks.size(), 0);
  for (size_t i = 0; i < c.masks.size(); ++i) {
    if (dominated[i]) continue;
    for (size_t j = 0; j < c.masks.size(); ++j) {
      if (i == j || dominated[j] || dominated[i]) continue;
      if (c.masks[i].bits == c.masks[j].bits) {
        if (inst.families[i].gr_id <= inst.families[j].gr_id) dominated[j] = 1;
        else dominated[i] = 1;
      } else if (c.masks[i].subset_of(c.masks[j])) {
        dominated[i] = 1;
      }
    }
  }
  std::vector<size_t> alive;
  for (size_t i = 0; i < c.masks.size(); ++i)
    if (!dominated[i]) alive.push_back(i);

  // upper bound from greedy
  std::vector<size_t> best_pick = greedy_pick(inst, c);
  size_t best_size = best_pick.size();

  // candidate lists per ground element
  std::vector<std::vector<size_t>> candidates(c.m);
  size_t max_family = 1;
  for (size_t fi : alive) {
    max_family = std::max(max_family, c.masks[fi].count);
    for (size_t bit = 0; bit < c.m; ++bit)
      if (c.masks[fi].bits[bit >> 6] >> (bit & 63) & 1) candidates[bit].push_back(fi);
  }

  size_t expansions = 0;
  std::vector<uint64_t> covered(c.words, 0);
  std::vector<size_t> current;

  std::function<void(size_t)> dfs = [&](size_t covered_count) {
    if (covered_count == c.m) {
      if (current.size() < best_size) {
        best_size = current.size();
        best_pick = current;
      }
      return;
    }
    if (current.size() + 1 > best_size) return;
    size_t remaining = c.m - covered_count;
    size_t lower = (remaining + max_family - 1) / max_family;
    if (current.size() + lower >= best_size) return;

    if (++expansions > budget)
      throw BudgetExceeded("exact cover exceeded " + std::to_string(budget) + " node expansions");

    // branch on the uncovered element with the fewest live candidates
    size_t pick_bit = SIZE_MAX, pick_n = SIZE_MAX;
    for (size_t bit = 0; bit < c.m; ++bit) {
      if (covered[bit >> 6] >> (bit & 63) & 1) continue;
      size_t n = candidates[bit].size();
      if (n < pick_n) {
        pick_n = n;
        pick_bit = bit;
      }
    }
    if (pick_bit == SIZE_MAX || pick_n == 0) return;  // uncoverable under reductions (cannot happen)

    std::vector<size_t> opts = candidates[pick_bit];
    std::stable_sort(opts.begin(), opts.end(), [&](size_t x, size_t y) {
      size_t gx = popcount_and_not(c.masks[x].bits, covered);
      size_t gy = popcount_and_not(c.masks[y].bits, covered);
      if (gx != gy) return gx > gy;
      return inst.families[x].gr_id < inst.families[y].gr_id;
    });
    for (size_t fi : opts) {
      std::vector<uint64_t> saved = covered;
      size_t gain = 0;
      for (size_t w = 0; w < c.words; ++w) {
        uint64_t add = c.masks[fi].bits[w] & ~covered[w];
        gain += static_cast<size_t>(__builtin_popcountll(add));
        covered[w] |= add;
      }
      current.push_back(fi);
      dfs(covered_count + gain);
      current.pop_back();
      covered = saved;
    }
  };
  dfs(0);

  // report in deterministic pick order (sorted by gr id)
  std::sort(best_pick.begin(), best_pick.end(),
            [&](size_t x, size_t y) { return inst.families[x].gr_id < inst.families[y].gr_id; });
  return finalize(inst, std::move(best_pick), SolverKind::Exact);
}

CoverageReport verify_cover(const SimplePolygon& P, const std::vector<Point>& guards, size_t samples,
                            uint64_t seed) {
  for (const auto& g : guards) {
    if (P.locate(g) == Location::Outside)
      throw InputOutsidePolygon("verify_cover: guard outside the polygon");
  }
  CoverageReport report;
  report.samples = samples;
  if (samples == 0) return report;

  oracle::SampleSet set = oracle::sample_polygon(P, samples, seed);
  std::vector<char> seen(samples, 0);
  parallel_for(samples, [&](size_t i) {
    for (const auto& g : guards) {
      if (sees(P, g, set.points[i])) {
        seen[i] = 1;
        return;
      }
    }
  });
  for (size_t i = 0; i < samples; ++i) {
    if (seen[i]) ++report.covered;
    else report.witnesses.push_back(set.points[i]);
  }
  return report;
}

}  // namespace gridguard
