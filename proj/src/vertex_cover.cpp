#include "dpgs/vertex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dpgs/errors.hpp"
#include "dpgs/rng.hpp"
#include "dpgs/util.hpp"
#include "json.hpp"

namespace dpgs {

std::vector<int> ImplicitCover::ranks() const {
  std::vector<int> rank(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
  return rank;
}

std::string ImplicitCover::to_json() const {
  nlohmann::json j;
  j["pi"] = order;
  j["lambda"] = lambda;
  return j.dump();
}

ImplicitCover ImplicitCover::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ImplicitCover c;
  c.order = j.at("pi").get<std::vector<int>>();
  c.lambda = j.at("lambda").get<int>();
  return c;
}

int cover_lookup(int u, int v, const std::vector<int>& rank, int lambda,
                 const std::vector<int>& final_degrees) {
  bool hu = final_degrees[u] > lambda;
  bool hv = final_degrees[v] > lambda;
  if (hu && hv) return rank[u] < rank[v] ? u : v;
  if (hu) return u;
  if (hv) return v;
  return rank[u] < rank[v] ? u : v;
}

std::int64_t cover_size_under_permutation(int n, const EdgeList& edges,
                                          const std::vector<int>& rank) {
  std::vector<char> owns(n, 0);
  for (auto [u, v] : edges) owns[rank[u] < rank[v] ? u : v] = 1;
  std::int64_t size = 0;
  for (char c : owns) size += c;
  return size;
}

std::vector<int> weighted_vertex_order(int n, const EdgeList& edges, double w,
                                       LaplaceSampler& rng) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  order.reserve(n);
  long long edges_left = static_cast<long long>(edges.size());
  int remaining = n;
  while (edges_left > 0) {
    double total = 0;
    for (int v = 0; v < n; ++v)
      if (!gone[v]) total += deg[v] + w;
    double target = rng.uniform() * total;
    int pick = -1;
    double acc = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      acc += deg[v] + w;
      pick = v;
      if (acc >= target) break;
    }
    gone[pick] = 1;
    order.push_back(pick);
    --remaining;
    for (int x : adj[pick]) {
      if (!gone[x]) {
        --deg[x];
        --edges_left;
      }
    }
  }
  // uniform shuffle of the exhausted tail
  std::vector<int> tail;
  tail.reserve(remaining);
  for (int v = 0; v < n; ++v)
    if (!gone[v]) tail.push_back(v);
  for (int i = static_cast<int>(tail.size()) - 1; i > 0; --i) {
    int j = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(i + 1));
    std::swap(tail[i], tail[j]);
  }
  order.insert(order.end(), tail.begin(), tail.end());
  return order;
}

ScoredSolution private_selection(const SelectionConfig& cfg, std::uint64_t seed,
                                 bool test_mode,
                                 const std::function<ScoredSolution(std::uint64_t)>& mech) {
  if (cfg.tau <= 0) throw EmptySelection("no repetition slots");
  double p = 1.0;
  if (!cfg.force_full_participation && !test_mode) {
    double u = keyed_uniform(seed, kSaltSelectP);
    p = std::pow(u, 1.0 / cfg.gamma);
  }
  bool found = false;
  ScoredSolution best;
  for (int slot = 0; slot < cfg.tau; ++slot) {
    double coin = keyed_uniform(seed, kSaltSelectSlot, static_cast<std::uint64_t>(slot));
    if (coin >= p) continue;
    ScoredSolution cand = mech(keyed_u64(seed, kSaltSelectMech, static_cast<std::uint64_t>(slot)));
    if (!found || cand.score < best.score) {
      best = std::move(cand);
      found = true;
    }
  }
  if (!found) throw EmptySelection("no selection slot fired");
  return best;
}

SemiStreamVertexCover::SemiStreamVertexCover(const VertexCoverConfig& cfg)
    : cfg_(cfg),
      xi_(std::sqrt((128.0 + 0.25) * cfg.alpha_tilde / cfg.eps)),
      filter_(cfg.n, ceil_pos((1.0 + 1.0 / xi_) * 2.0 * cfg.alpha_tilde)) {
  ledger_.add("vc-selection", cfg_.eps);
}

void SemiStreamVertexCover::observe(const EdgeUpdate& u) {
  EdgeUpdate passed = filter_.filter(u);
  if (!passed.is_noop()) stored_.emplace_back(passed.u, passed.v);
}

ImplicitCover SemiStreamVertexCover::finish() {
  int lambda = filter_.lambda();
  double gamma = cfg_.gamma;
  double eps_edge = cfg_.eps / ((2.0 + 2.0 * gamma) * 2.0 * lambda);
  double score_scale = (2.0 + gamma) * (2.0 + 2.0 * gamma) * 2.0 * lambda /
                       (gamma * cfg_.eps);
  double w = cfg_.glm_weight > 0 ? cfg_.glm_weight : 4.0 / eps_edge;

  SelectionConfig sel;
  sel.eps = cfg_.eps / (2.0 + gamma);
  sel.gamma = gamma;
  sel.tau = cfg_.tau;

  const int n = cfg_.n;
  const EdgeList& edges = stored_;
  bool test_mode = cfg_.test_mode;
  auto mech = [&, w, score_scale](std::uint64_t slot_seed) {
    LaplaceSampler rng(slot_seed, false);
    LaplaceSampler noise(mix64(slot_seed ^ 0x5e1f), test_mode);
    ScoredSolution out;
    out.order = weighted_vertex_order(n, edges, w, rng);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[out.order[i]] = i;
    out.score = static_cast<double>(cover_size_under_permutation(n, edges, rank)) +
                noise.sample(score_scale);
    return out;
  };
  ScoredSolution best = private_selection(sel, cfg_.seed, cfg_.test_mode, mech);
  ImplicitCover cover;
  cover.order = std::move(best.order);
  cover.lambda = lambda;
  return cover;
}

bool cover_covers_graph(const ImplicitCover& cover, int n, const EdgeList& edges) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> rank = cover.ranks();
  std::vector<char> in_cover(n, 0);
  for (auto [u, v] : edges)
    in_cover[cover_lookup(u, v, rank, cover.lambda, deg)] = 1;
  for (auto [u, v] : edges)
    if (!in_cover[u] && !in_cover[v]) return false;
  return true;
}

std::int64_t released_cover_size(const ImplicitCover& cover, int n,
                                 const EdgeList& graph_edges,
                                 const EdgeList& sparsified_edges) {
  // |C_pi on H  union  V_> of G|
  std::vector<int> deg(n, 0);
  for (auto [u, v] : graph_edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> rank = cover.ranks();
  std::vector<char> member(n, 0);
  for (auto [u, v] : sparsified_edges) member[rank[u] < rank[v] ? u : v] = 1;
  for (int v = 0; v < n; ++v)
    if (deg[v] > cover.lambda) member[v] = 1;
  std::int64_t size = 0;
  for (char c : member) size += c;
  return size;
}

}  // namespace dpgs
