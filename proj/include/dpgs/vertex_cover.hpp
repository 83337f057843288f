#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpgs/ledger.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/rng.hpp"
#include "dpgs/sparsify.hpp"
#include "dpgs/stream.hpp"

namespace dpgs {

// Released implicit solution: a total vertex ordering plus a degree threshold.
// An edge is covered first by an endpoint whose final degree exceeds lambda
// (ties to the earlier vertex in the order), otherwise by the earlier one.
struct ImplicitCover {
  std::vector<int> order;  // order[i] = vertex at rank i
  int lambda = 0;

  std::vector<int> ranks() const;
  std::string to_json() const;
  static ImplicitCover from_json(const std::string& text);
};

int cover_lookup(int u, int v, const std::vector<int>& rank, int lambda,
                 const std::vector<int>& final_degrees);

// Number of vertices owning at least one edge when each edge goes to its
// earlier endpoint; equals the count of vertices with nonzero out-degree
// under the induced orientation.
std::int64_t cover_size_under_permutation(int n, const EdgeList& edges,
                                          const std::vector<int>& rank);

// Ordering built by repeatedly drawing a remaining vertex with probability
// proportional to its current degree plus w and deleting it; once the graph
// is exhausted the leftover vertices are shuffled uniformly into the tail.
std::vector<int> weighted_vertex_order(int n, const EdgeList& edges, double w,
                                       LaplaceSampler& rng);

struct SelectionConfig {
  double eps = 1.0;
  double gamma = 1.0 / 512.0;
  int tau = 64;
  bool force_full_participation = false;  // test hook: p = 1
};

struct ScoredSolution {
  double score = 0.0;
  std::vector<int> order;
};

// Runs the mechanism independently with probability p (p drawn once from the
// gamma-power law) at each of tau slots and keeps the lowest noisy score.
// Throws EmptySelection when no slot fires.
ScoredSolution private_selection(const SelectionConfig& cfg, std::uint64_t seed,
                                 bool test_mode,
                                 const std::function<ScoredSolution(std::uint64_t)>& mech);

struct VertexCoverConfig {
  int n = 0;
  double alpha_tilde = 1.0;
  double eta = 1.0;
  double eps = 1.0;
  double gamma = 1.0 / 512.0;
  int tau = 64;
  double glm_weight = 0.0;  // 0: derive 4/eps_edge
  std::uint64_t seed = 1;
  bool test_mode = false;
};

// One-shot semi-streaming driver: degree-cap filter over the stream, then a
// boosted ordering mechanism on the stored subgraph at the end.
class SemiStreamVertexCover {
 public:
  explicit SemiStreamVertexCover(const VertexCoverConfig& cfg);

  void observe(const EdgeUpdate& u);
  ImplicitCover finish();  // may throw EmptySelection

  int lambda() const { return filter_.lambda(); }
  double xi() const { return xi_; }
  const EdgeList& stored_edges() const { return stored_; }
  const PrivacyLedger& ledger() const { return ledger_; }

 private:
  VertexCoverConfig cfg_;
  double xi_;
  DegreeCapFilter filter_;
  EdgeList stored_;
  PrivacyLedger ledger_;
};

// Evaluation helpers for released covers.
bool cover_covers_graph(const ImplicitCover& cover, int n, const EdgeList& edges);
std::int64_t released_cover_size(const ImplicitCover& cover, int n, const EdgeList& graph_edges,
                                 const EdgeList& sparsified_edges);

}  // namespace dpgs
