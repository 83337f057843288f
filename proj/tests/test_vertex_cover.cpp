#include <numeric>

#include "brute.hpp"
#include "doctest.h"
#include "dpgs/audit.hpp"
#include "dpgs/errors.hpp"
#include "dpgs/generators.hpp"
#include "dpgs/rng.hpp"
#include "dpgs/vertex_cover.hpp"

using namespace dpgs;

TEST_CASE("cover lookup rules") {
  std::vector<int> rank = {1, 0, 2};  // order b, a, c
  std::vector<int> deg = {3, 1, 0};
  CHECK(cover_lookup(0, 1, rank, 1, deg) == 0);  // high-degree endpoint wins
  std::vector<int> deg2 = {2, 2, 0};
  CHECK(cover_lookup(0, 1, rank, 5, deg2) == 1);  // both low: earlier in order

  std::vector<int> deg3 = {9, 9, 0};
  CHECK(cover_lookup(0, 1, rank, 1, deg3) == 1);  // both high: earlier wins
}

TEST_CASE("lookup union is a vertex cover") {
  LaplaceSampler rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 8;
    EdgeList edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < 0.4) edges.emplace_back(u, v);
    ImplicitCover cover;
    cover.order.resize(n);
    std::iota(cover.order.begin(), cover.order.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(cover.order[i], cover.order[rng.raw() % (i + 1)]);
    cover.lambda = 2;
    CHECK(cover_covers_graph(cover, n, edges));
    std::vector<int> rank = cover.ranks();
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    for (auto [u, v] : edges) {
      int w = cover_lookup(u, v, rank, cover.lambda, deg);
      CHECK((w == u || w == v));
    }
  }
}

TEST_CASE("fixed-order cover size examples and sensitivity") {
  std::vector<int> rank = {0, 1, 2, 3};
  CHECK(cover_size_under_permutation(4, {}, rank) == 0);
  CHECK(cover_size_under_permutation(4, {{1, 3}}, rank) == 1);

  AuditReport rep = audit_fixed_permutation_cover(4);
  CHECK(rep.ok);
  CHECK(rep.worst <= 1.0);
}

TEST_CASE("weighted order on the empty graph is a permutation") {
  LaplaceSampler rng(5);
  auto order = weighted_vertex_order(6, {}, 2.0, rng);
  REQUIRE(order.size() == 6);
  std::vector<char> seen(6, 0);
  for (int v : order) {
    CHECK(!seen[v]);
    seen[v] = 1;
  }
}

TEST_CASE("weighted order star first pick probability") {
  // star K_{1,5}: P[center first] = (5+w)/(10+6w)
  double w = 0.5;
  EdgeList star;
  for (int l = 1; l <= 5; ++l) star.emplace_back(0, l);
  int hits = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    LaplaceSampler rng(1000 + t);
    if (weighted_vertex_order(6, star, w, rng)[0] == 0) ++hits;
  }
  double expect = (5.0 + w) / (10.0 + 6.0 * w);
  double sigma = std::sqrt(expect * (1 - expect) / trials);
  CHECK(std::fabs(hits / static_cast<double>(trials) - expect) < 4 * sigma);
}

TEST_CASE("weighted order induces bounded covers on small graphs") {
  LaplaceSampler rng(6);
  double worst_factor = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int n = 6 + static_cast<int>(rng.raw() % 5);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < 0.35) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    auto order = weighted_vertex_order(n, edges, 0.5, rng);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    double induced = static_cast<double>(cover_size_under_permutation(n, edges, rank));
    double opt = brute::min_vertex_cover(n, edges);
    worst_factor = std::max(worst_factor, induced / opt);
  }
  CHECK(worst_factor <= 6.0);  // generous factor for the small-w regime
}

TEST_CASE("private selection basics") {
  SelectionConfig cfg;
  cfg.tau = 3;
  cfg.gamma = 1.0;
  cfg.force_full_participation = true;
  int calls = 0;
  auto mech = [&](std::uint64_t) {
    ScoredSolution s;
    s.score = (calls == 0) ? 3.0 : (calls == 1 ? 1.0 : 2.0);
    s.order = {calls};
    ++calls;
    return s;
  };
  ScoredSolution best = private_selection(cfg, 1, false, mech);
  CHECK(best.score == 1.0);
  CHECK(best.order == std::vector<int>{1});

  SelectionConfig none;
  none.tau = 0;
  CHECK_THROWS_AS(private_selection(none, 1, false, mech), EmptySelection);
}

TEST_CASE("selection boosting lifts a coin-flip mechanism") {
  // mechanism succeeds (score 0) with probability 1/2, else score 100
  const int n = 32;
  int good = 0, total = 0;
  for (int rep = 0; rep < 40; ++rep) {
    SelectionConfig cfg;
    cfg.gamma = 1.0;
    cfg.tau = 2 * n;  // ~ q^-1 n^{1/gamma} log scale at desk size
    auto mech = [&](std::uint64_t s) {
      ScoredSolution out;
      out.score = keyed_uniform(s, 0xc01) < 0.5 ? 0.0 : 100.0;
      return out;
    };
    try {
      ScoredSolution best = private_selection(cfg, 5000 + rep, false, mech);
      ++total;
      if (best.score <= 0.0) ++good;
    } catch (const EmptySelection&) {
      ++total;
    }
  }
  CHECK(good >= total * 6 / 10);
}

TEST_CASE("semi-stream cover on the empty stream") {
  VertexCoverConfig cfg;
  cfg.n = 8;
  cfg.alpha_tilde = 1;
  cfg.eps = 4.0;
  cfg.gamma = 1.0;
  cfg.tau = 8;
  cfg.seed = 3;
  cfg.test_mode = true;
  SemiStreamVertexCover driver(cfg);
  for (int t = 0; t < 5; ++t) driver.observe(EdgeUpdate::noop());
  ImplicitCover cover = driver.finish();
  CHECK(cover.order.size() == 8);
  CHECK(cover_covers_graph(cover, 8, {}));
  CHECK(released_cover_size(cover, 8, {}, {}) == 0);
}

TEST_CASE("semi-stream cover covers forests in test mode") {
  LaplaceSampler rng(8);
  for (int rep = 0; rep < 15; ++rep) {
    int n = 12;
    UpdateStream s = forest_union_stream(n, 1, -1, rng.raw());
    VertexCoverConfig cfg;
    cfg.n = n;
    cfg.alpha_tilde = 1;
    cfg.eta = 1.0;
    cfg.eps = 64.0;
    cfg.gamma = 1.0;
    cfg.tau = 8;
    cfg.seed = rep;
    cfg.test_mode = true;
    SemiStreamVertexCover driver(cfg);
    for (const auto& u : s.updates) driver.observe(u);
    ImplicitCover cover = driver.finish();
    DynamicGraph g = replay(s);
    CHECK(cover_covers_graph(cover, n, g.edge_list()));
  }
}

TEST_CASE("high degree overflow stays small against optimal covers") {
  // |V_> \ C*| <= xi |C*| with Lambda = (1 + 1/xi) 2 alpha on forest unions
  LaplaceSampler rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 10;
    int alpha = 1 + static_cast<int>(rng.raw() % 2);
    UpdateStream s = forest_union_stream(n, alpha, -1, rng.raw());
    DynamicGraph g = replay(s);
    EdgeList edges = g.edge_list();
    if (edges.empty()) continue;
    double xi = 2.0;
    int lambda = ceil_pos((1.0 + 1.0 / xi) * 2.0 * alpha);
    int opt = brute::min_vertex_cover(n, edges);
    // count high-degree vertices outside some optimal cover
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != opt) continue;
      bool covers = true;
      for (auto [u, v] : edges)
        if (!(mask & (1u << u)) && !(mask & (1u << v))) {
          covers = false;
          break;
        }
      if (!covers) continue;
      int overflow = 0;
      for (int v = 0; v < n; ++v)
        if (g.degrees[v] > lambda && !(mask & (1u << v))) ++overflow;
      CHECK(overflow <= static_cast<int>(xi * opt));
      break;
    }
  }
}

TEST_CASE("implicit cover json round trip") {
  ImplicitCover cover;
  cover.order = {2, 0, 1};
  cover.lambda = 5;
  ImplicitCover back = ImplicitCover::from_json(cover.to_json());
  CHECK(back.order == cover.order);
  CHECK(back.lambda == cover.lambda);
}
