#include "brute.hpp"
#include "doctest.h"
#include "dpgs/audit.hpp"
#include "dpgs/generators.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/rng.hpp"
#include "dpgs/sparsify.hpp"

using namespace dpgs;

TEST_CASE("degree cap filter admission rule") {
  DegreeCapFilter f2(4, 2);
  CHECK(!f2.filter(EdgeUpdate::insert(0, 1)).is_noop());

  DegreeCapFilter f1(4, 1);
  CHECK(!f1.filter(EdgeUpdate::insert(0, 1)).is_noop());
  CHECK(f1.filter(EdgeUpdate::insert(0, 2)).is_noop());  // d_0 == 1, not < 1

  // vertex with three arrivals at cap 2: exactly the first two with partner
  // slack pass
  DegreeCapFilter f(5, 2);
  CHECK(!f.filter(EdgeUpdate::insert(0, 1)).is_noop());
  CHECK(!f.filter(EdgeUpdate::insert(0, 2)).is_noop());
  CHECK(f.filter(EdgeUpdate::insert(0, 3)).is_noop());
  CHECK(f.admitted_count() == 2);
  for (int v = 0; v < 5; ++v) CHECK(f.admitted_degrees()[v] <= 2);

  // noop and delete pass through as noop
  CHECK(f.filter(EdgeUpdate::noop()).is_noop());
}

TEST_CASE("sparsifier distance bound on random node-neighboring pairs") {
  AuditReport rep = audit_sparsifier_distance(300, 50, 3, 21);
  CHECK(rep.ok);
  CHECK(rep.worst <= 6.0);
}

TEST_CASE("sparsifier preserves matchings on forest unions") {
  LaplaceSampler rng(31);
  double eta = 1.0;
  for (int rep = 0; rep < 25; ++rep) {
    int alpha = 1 + static_cast<int>(rng.raw() % 3);
    int n = 10 + static_cast<int>(rng.raw() % 30);
    UpdateStream s = forest_union_stream(n, alpha, -1, rng.raw());
    int lambda = matching_sparsifier_lambda(alpha, eta);
    DegreeCapFilter filter(n, lambda);
    EdgeList g_edges, h_edges;
    for (const auto& u : s.updates) {
      if (u.kind == EdgeUpdate::Kind::Insert) g_edges.emplace_back(u.u, u.v);
      EdgeUpdate passed = filter.filter(u);
      if (!passed.is_noop()) h_edges.emplace_back(passed.u, passed.v);
    }
    int mu_g = exact_matching_size(n, g_edges);
    int mu_h = exact_matching_size(n, h_edges);
    CHECK(mu_h <= mu_g);
    CHECK(mu_g <= static_cast<int>((1.0 + eta) * mu_h));
  }
}

TEST_CASE("exact driver noise-free ladder on a perfect matching") {
  // mu climbs 1..6; released value is the largest passed power of two
  ExactNodeMatching driver(12, 1, 8.0, 1.0, 3, true);
  std::vector<double> outputs;
  for (int i = 0; i < 6; ++i)
    outputs.push_back(driver.process_update(EdgeUpdate::insert(2 * i, 2 * i + 1)).estimate);
  CHECK(outputs.front() == 1.0);  // mu=1: passed 1, failed 2
  CHECK(outputs.back() == 4.0);   // mu=6: passed 1,2,4, failed 8
  for (double v : outputs) {
    double l = std::log2(v);
    CHECK(l == doctest::Approx(std::round(l)));  // powers of two
  }
  CHECK(driver.exact_matching_now() == 6);
}

TEST_CASE("exact driver outputs one on empty streams") {
  ExactNodeMatching driver(6, 1, 4.0, 1.0, 9, true);
  for (int t = 0; t < 10; ++t)
    CHECK(driver.process_update(EdgeUpdate::noop()).estimate == 1.0);
}

TEST_CASE("stored matching size is monotone with unit steps") {
  LaplaceSampler rng(41);
  UpdateStream s = forest_union_stream(16, 2, -1, 13);
  ExactNodeMatching driver(16, 2, 10.0, 1.0, 5, true);
  int last = 0;
  for (const auto& u : s.updates) {
    driver.process_update(u);
    int mu = driver.exact_matching_now();
    CHECK(mu >= last);
    CHECK(mu - last <= 1);
    last = mu;
  }
}

TEST_CASE("sublinear node driver filters then estimates") {
  UpdateStream s = forest_union_stream(20, 1, -1, 2);
  SublinearNodeMatching driver(20, 1, 60.0, 1.0, 7, true);
  int admitted = 0;
  for (const auto& u : s.updates) {
    NodeMatchingStep step = driver.process_update(u);
    admitted += step.admitted ? 1 : 0;
    CHECK(step.estimate >= 1.0);
  }
  CHECK(admitted > 0);
  CHECK(driver.lambda() == matching_sparsifier_lambda(1, 1.0));
}

TEST_CASE("degeneracy bracket moves by at most one when a vertex drops out") {
  LaplaceSampler rng(43);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 8;
    EdgeList edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < 0.4) edges.emplace_back(u, v);
    auto [lo, hi] = arboricity_bracket(n, edges);
    for (int v_star = 0; v_star < n; ++v_star) {
      EdgeList fewer;
      for (auto e : edges)
        if (e.first != v_star && e.second != v_star) fewer.push_back(e);
      auto [lo2, hi2] = arboricity_bracket(n, fewer);
      CHECK(std::abs(hi - hi2) <= 1);
      CHECK(std::abs(lo - lo2) <= 1);
    }
  }
}
