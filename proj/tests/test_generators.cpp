#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "dpgs/errors.hpp"
#include "dpgs/generators.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/rng.hpp"

using namespace dpgs;

TEST_CASE("forest stream properties") {
  UpdateStream one = forest_union_stream(40, 1, -1, 7);
  EdgeList edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& u : one.updates) {
    REQUIRE(u.kind == EdgeUpdate::Kind::Insert);
    CHECK(!seen.count({u.u, u.v}));
    seen.insert({u.u, u.v});
    edges.emplace_back(u.u, u.v);
  }
  CHECK(degeneracy(40, edges) == 1);  // a forest
  CHECK(static_cast<int>(edges.size()) <= 39);

  UpdateStream two = forest_union_stream(100, 2, -1, 9);
  EdgeList e2;
  for (const auto& u : two.updates)
    if (u.kind == EdgeUpdate::Kind::Insert) e2.emplace_back(u.u, u.v);
  CHECK(static_cast<int>(e2.size()) <= 2 * 99);
  auto [lo, hi] = arboricity_bracket(100, e2);
  CHECK(hi <= 4);  // alpha <= 2, degeneracy <= 2*alpha

  // padding and truncation
  UpdateStream padded = forest_union_stream(10, 1, 30, 11);
  CHECK(padded.length() == 30);
  UpdateStream cut = forest_union_stream(10, 1, 3, 11);
  CHECK(cut.length() == 3);
  CHECK_THROWS_AS(forest_union_stream(1, 1, 5, 1), InfeasibleT);
}

TEST_CASE("forest stream arboricity never exceeds alpha") {
  LaplaceSampler rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    int alpha = 1 + static_cast<int>(rng.raw() % 3);
    UpdateStream s = forest_union_stream(8, alpha, -1, rng.raw());
    EdgeList edges;
    for (const auto& u : s.updates)
      if (u.kind == EdgeUpdate::Kind::Insert) edges.emplace_back(u.u, u.v);
    CHECK(brute::arboricity(8, edges) <= alpha);
  }
}

TEST_CASE("planted clique stream contains its clique") {
  UpdateStream s = planted_clique_stream(30, 6, 0.05, 13);
  DynamicGraph g = replay(s);
  // some 6 vertices with degree >= 5 inside the clique
  int high = 0;
  for (int v = 0; v < 30; ++v)
    if (g.degrees[v] >= 5) ++high;
  CHECK(high >= 6);
  CHECK(exact_density(30, g.edge_list()).density.value() >= 2.5);
}

TEST_CASE("clique with pendants") {
  UpdateStream s = clique_with_pendants_stream(5, 12, 17);
  CHECK(s.n == 17);
  DynamicGraph g = replay(s);
  CHECK(g.m == 10 + 12);
  auto cores = exact_core_numbers(17, g.edge_list());
  for (int v = 0; v < 5; ++v) CHECK(cores[v] == 4);
  for (int v = 5; v < 17; ++v) CHECK(cores[v] == 1);
}

TEST_CASE("reduction decode hand examples") {
  ReductionSpec spec;
  spec.secret = {1, 0, 1};
  spec.queries = {{1, 1, 0}};
  spec.target = ReductionTarget::Matching;
  ReductionInstance inst = make_reduction(spec);
  CHECK(inst.true_inner_products == std::vector<long long>{1});
  CHECK(decode_with_exact_counters(inst) == inst.true_inner_products);

  // zero query decodes to zero against any secret
  ReductionSpec zero;
  zero.secret = {1, 1, 0, 1};
  zero.queries = {{0, 0, 0, 0}};
  zero.target = ReductionTarget::Matching;
  CHECK(decode_with_exact_counters(make_reduction(zero)) ==
        std::vector<long long>{0});
}

TEST_CASE("reduction stream shapes match the construction") {
  ReductionSpec spec = random_reduction_spec(8, 3, ReductionTarget::Matching, 3);
  ReductionInstance inst = make_reduction(spec);
  CHECK(inst.stream.n == 24);
  CHECK(inst.stream.length() == 8 + 2 * 8 * 3);
  CHECK(inst.stream.has_delete());
  // bipartite, max degree 2, arboricity 1 at every prefix: degree check
  DynamicGraph g(inst.stream.n);
  for (const auto& u : inst.stream.updates) {
    apply_update(g, u);
    for (int v = 0; v < g.n; ++v) CHECK(g.degrees[v] <= 2);
  }

  ReductionSpec cc = random_reduction_spec(5, 2, ReductionTarget::Components, 4);
  ReductionInstance ci = make_reduction(cc);
  CHECK(ci.stream.n == 20);
  CHECK(ci.stream.length() == 3 * 5 + 2 * 5 * 2);
}

TEST_CASE("reduction decode is exact on random instances, both targets") {
  for (int rep = 0; rep < 10; ++rep) {
    for (ReductionTarget target :
         {ReductionTarget::Matching, ReductionTarget::Components}) {
      ReductionSpec spec = random_reduction_spec(10, 4, target, 50 + rep);
      ReductionInstance inst = make_reduction(spec);
      CHECK(decode_with_exact_counters(inst) == inst.true_inner_products);
    }
  }
}
