#include "gridguard/setcover.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gridguard;
using namespace gridguard::testing;

namespace {

SetCoverInstance toy_instance(std::vector<int> ground, std::vector<std::vector<int>> fams) {
  SetCoverInstance inst;
  inst.ground = std::move(ground);
  for (size_t i = 0; i < fams.size(); ++i) {
    SetCoverInstance::Family f;
    f.gr_id = static_cast<int>(i);
    f.visible = std::make_shared<const std::vector<int>>(std::move(fams[i]));
    f.guard = pt(static_cast<int>(i), 0);
    inst.families.push_back(std::move(f));
  }
  return inst;
}

}  // namespace

TEST_CASE("build_instance validates feasibility") {
  SimplePolygon sq = unit_square();
  DecompositionConfig cfg;
  auto cells = build_sc_regions(sq, cfg);
  auto grs = build_all_guarding_regions(sq, cells);
  auto inst = build_instance(cells, grs);
  CHECK(inst.ground.size() == cells.size());
  CHECK(inst.families.size() == grs.size());

  // truncating the families breaks the union invariant
  auto broken = grs;
  for (auto& g : broken) {
    auto reduced = std::make_shared<std::vector<int>>(g.vl());
    reduced->erase(std::remove(reduced->begin(), reduced->end(), 0), reduced->end());
    g.visible_list = reduced;
  }
  CHECK_THROWS_AS(build_instance(cells, broken), InfeasibleInstance);
}

TEST_CASE("greedy picks the covering family") {
  auto inst = toy_instance({1, 2, 3}, {{1, 2}, {2, 3}, {1, 2, 3}});
  auto sol = greedy_cover(inst);
  CHECK(sol.size() == 1);
  CHECK(sol.chosen == std::vector<int>{2});
  CHECK(sol.covered == std::vector<int>{1, 2, 3});
}

TEST_CASE("greedy breaks ties toward the smaller gr id") {
  auto inst = toy_instance({1, 2, 3, 4}, {{3, 4}, {1, 2}, {2, 1}});
  auto sol = greedy_cover(inst);
  REQUIRE(sol.size() == 2);
  CHECK(sol.chosen[0] == 0);  // first pick: gains tie at 2, id 0 wins
  CHECK(sol.chosen[1] == 1);
}

TEST_CASE("exact cover solves small instances optimally") {
  auto inst = toy_instance({1, 2, 3}, {{1}, {2}, {3}, {1, 2}});
  auto sol = exact_cover(inst);
  CHECK(sol.size() == 2);
  CHECK(sol.chosen == std::vector<int>{2, 3});

  auto one = toy_instance({1, 2, 3}, {{1, 2}, {2, 3}, {1, 2, 3}});
  CHECK(exact_cover(one).size() == 1);
}

TEST_CASE("exact cover stays within the node budget or throws") {
  // pairwise disjoint families force a deep search; nothing prunes the root
  std::vector<std::vector<int>> fams;
  std::vector<int> ground;
  for (int e = 0; e < 24; ++e) ground.push_back(e);
  for (int f = 0; f < 12; ++f) fams.push_back({2 * f, 2 * f + 1});
  for (int f = 0; f < 8; ++f) fams.push_back({3 * f, 3 * f + 1, 3 * f + 2});
  auto inst = toy_instance(ground, fams);
  CHECK_THROWS_AS(exact_cover(inst, 1), BudgetExceeded);
  auto sol = exact_cover(inst, 10'000'000);
  CHECK(sol.covered == ground);
  CHECK(sol.size() == 8);  // the eight triples
}

TEST_CASE("greedy stays within the harmonic bound of exact on random instances") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 25; ++round) {
    size_t m = 6 + rng() % 10;
    std::vector<int> ground;
    for (size_t e = 0; e < m; ++e) ground.push_back(static_cast<int>(e));
    std::vector<std::vector<int>> fams;
    for (size_t f = 0; f < m + 6; ++f) {
      std::vector<int> set;
      for (size_t e = 0; e < m; ++e)
        if (rng() % 3 == 0) set.push_back(static_cast<int>(e));
      if (!set.empty()) fams.push_back(std::move(set));
    }
    fams.push_back(ground);  // feasibility
    auto inst = toy_instance(ground, fams);
    auto g = greedy_cover(inst);
    auto x = exact_cover(inst);
    double h = 0;
    for (size_t i = 1; i <= m; ++i) h += 1.0 / static_cast<double>(i);
    CHECK(static_cast<double>(g.size()) <= h * static_cast<double>(x.size()) + 1e-9);
    CHECK(x.size() <= g.size());
  }
}

TEST_CASE("verify_cover sees everything from one guard in a convex polygon") {
  SimplePolygon sq = unit_square();
  auto report = verify_cover(sq, {pt(1, 3, 2, 3)}, 2000, 7);
  CHECK(report.full());
  CHECK(report.fraction() == Scalar(1));
  CHECK(report.witnesses.empty());
}

TEST_CASE("verify_cover finds witnesses behind the reflex corner") {
  SimplePolygon l = lshape();
  // a guard deep in the right arm misses part of the upper arm
  auto report = verify_cover(l, {pt(7, 4, 1, 2)}, 2000, 7);
  CHECK_FALSE(report.full());
  CHECK(report.witnesses.size() == report.samples - report.covered);
  for (const auto& w : report.witnesses) {
    CHECK(l.locate(w) == Location::Inside);
    CHECK_FALSE(sees(l, pt(7, 4, 1, 2), w));
  }
}

TEST_CASE("verify_cover rejects guards outside the polygon") {
  SimplePolygon l = lshape();
  CHECK_THROWS_AS(verify_cover(l, {pt(3, 2, 3, 2)}, 10, 1), InputOutsidePolygon);
}
