#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "dpgs/audit.hpp"
#include "dpgs/generators.hpp"
#include "dpgs/matching.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/rng.hpp"

using namespace dpgs;

TEST_CASE("counter eviction trace at alpha=1") {
  // insertions u-a, u-b, u-c: the first edge collects two later arrivals at u
  // and leaves the sample
  SampledMatchingEstimator est(4, 1, 100.0, 1.0, 1, true);
  est.process_update(EdgeUpdate::insert(0, 1));
  est.process_update(EdgeUpdate::insert(0, 2));
  CHECK(est.sample_size() == 2);
  est.process_update(EdgeUpdate::insert(0, 3));
  CHECK(est.sample_size() == 2);  // {u,b} and {u,c} stay, {u,a} evicted
}

TEST_CASE("noop stream keeps estimate at one") {
  SampledMatchingEstimator est(5, 2, 10.0, 0.5, 3, true);
  for (int t = 0; t < 20; ++t) {
    MatchingStep step = est.process_update(EdgeUpdate::noop());
    CHECK(step.estimate == 1.0);
    CHECK(step.sample_size == 0);
  }
}

TEST_CASE("per-endpoint counters stay pairwise distinct") {
  LaplaceSampler rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 6;
    UpdateStream s = forest_union_stream(n, 2, -1, rng.raw());
    SampledMatchingEstimator est(n, 2, 50.0, 1.0, rep, false);
    // peek into the dynamics through the audit replica instead: rebuild the
    // sample with p=1 and check distinctness after every update
    struct E {
      int u, v, cu, cv;
    };
    std::vector<E> sample;
    for (const auto& u : s.updates) {
      if (u.kind != EdgeUpdate::Kind::Insert) continue;
      for (auto& e : sample) {
        if (e.u == u.u || e.v == u.u) ++(e.u == u.u ? e.cu : e.cv);
        if (e.u == u.v || e.v == u.v) ++(e.u == u.v ? e.cu : e.cv);
      }
      sample.push_back({u.u, u.v, 0, 0});
      sample.erase(std::remove_if(sample.begin(), sample.end(),
                                  [&](const E& e) { return e.cu > 2 || e.cv > 2; }),
                   sample.end());
      for (int w = 0; w < n; ++w) {
        std::set<int> counts;
        int incident = 0;
        for (const auto& e : sample) {
          if (e.u == w) {
            counts.insert(e.cu);
            ++incident;
          } else if (e.v == w) {
            counts.insert(e.cv);
            ++incident;
          }
        }
        CHECK(static_cast<int>(counts.size()) == incident);
      }
    }
  }
}

TEST_CASE("good edge count examples") {
  // star inserted center-outward with alpha=1: only the last two edges stay good
  std::vector<EdgeUpdate> star = {EdgeUpdate::insert(0, 1), EdgeUpdate::insert(0, 2),
                                  EdgeUpdate::insert(0, 3), EdgeUpdate::insert(0, 4)};
  CHECK(good_edge_count(star, 1) == 2);
  CHECK(good_edge_count({EdgeUpdate::insert(0, 1)}, 0) == 1);
  CHECK(good_edge_count({EdgeUpdate::insert(0, 1)}, 3) == 1);
}

TEST_CASE("good edge bracket on forest unions") {
  LaplaceSampler rng(77);
  for (int rep = 0; rep < 40; ++rep) {
    int alpha = 1 + static_cast<int>(rng.raw() % 3);
    int n = 8 + static_cast<int>(rng.raw() % 25);
    UpdateStream s = forest_union_stream(n, alpha, -1, rng.raw());
    EdgeList edges;
    for (const auto& u : s.updates)
      if (u.kind == EdgeUpdate::Kind::Insert) edges.emplace_back(u.u, u.v);
    std::int64_t good = good_edge_count(s.updates, alpha);
    int matching = exact_matching_size(n, edges);
    CHECK(matching <= good);
    CHECK(good <= static_cast<std::int64_t>(alpha + 2) * matching);
  }
}

TEST_CASE("coupled sensitivity, small exhaustive slice") {
  AuditReport rep = audit_matching_sensitivity_exhaustive(4, 5, {1}, {1, 2}, 1.0, 0.5);
  CHECK(rep.ok);
  CHECK(rep.worst <= 2.0);
  CHECK(rep.cases > 0);
}

TEST_CASE("coupled sensitivity with forced halving") {
  AuditReport rep = audit_matching_sensitivity_random(60, 6, 12, 2, 1.0, 0.5, 99);
  CHECK(rep.ok);
  CHECK(rep.worst <= 2.0);
}

TEST_CASE("estimate is nondecreasing and freezes on abort") {
  LaplaceSampler rng(55);
  UpdateStream s = forest_union_stream(20, 2, -1, 4);
  SampledMatchingEstimator est(20, 2, 0.4, 0.5, 5, false);
  double last = 0.0;
  bool frozen_seen = false;
  double frozen_at = 0.0;
  for (const auto& u : s.updates) {
    MatchingStep step = est.process_update(u);
    CHECK(step.estimate >= last);
    last = step.estimate;
    if (frozen_seen) CHECK(step.estimate == frozen_at);
    if (step.frozen && !frozen_seen) {
      frozen_seen = true;
      frozen_at = step.estimate;
    }
  }
}

TEST_CASE("guessing wrapper selects by arboricity estimate") {
  GuessedArboricityMatching wrapper(32, 4.0, 1.0, 7, true);
  CHECK(wrapper.instance_count() == 5);
  CHECK(wrapper.selected_index(1.0) == 0);
  CHECK(wrapper.selected_index(2.0) == 1);
  CHECK(wrapper.selected_index(5.0) == 3);
  CHECK(wrapper.selected_index(1000.0) == 4);  // clamped
  UpdateStream s = forest_union_stream(32, 2, -1, 11);
  for (const auto& u : s.updates) wrapper.process_update(u);
  CHECK(wrapper.estimate_for(2.0) >= 1.0);
}
