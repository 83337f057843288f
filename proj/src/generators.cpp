#include "dpgs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dpgs/errors.hpp"
#include "dpgs/rng.hpp"

namespace dpgs {

namespace {

void shuffle_edges(EdgeList& edges, LaplaceSampler& rng) {
  for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i) {
    int j = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(i + 1));
    std::swap(edges[i], edges[j]);
  }
}

UpdateStream stream_from_edges(int n, const EdgeList& edges, std::int64_t T) {
  UpdateStream s;
  s.n = n;
  EdgeList use = edges;
  if (T >= 0 && static_cast<std::int64_t>(use.size()) > T)
    use.resize(static_cast<size_t>(T));
  for (auto [u, v] : use) s.updates.push_back(EdgeUpdate::insert(u, v));
  if (T >= 0)
    while (s.length() < T) s.updates.push_back(EdgeUpdate::noop());
  return s;
}

// uniform labeled tree from a random Pruefer sequence
EdgeList random_spanning_tree(int n, LaplaceSampler& rng) {
  EdgeList tree;
  if (n < 2) return tree;
  if (n == 2) {
    tree.emplace_back(0, 1);
    return tree;
  }
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer)
    x = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    tree.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  tree.emplace_back(std::min(a, b), std::max(a, b));
  return tree;
}

}  // namespace

UpdateStream forest_union_stream(int n, int alpha, std::int64_t T, std::uint64_t seed) {
  if (n < 2 || alpha < 1 || T == 0)
    throw InfeasibleT("forest stream needs n >= 2, alpha >= 1, T != 0");
  LaplaceSampler rng(seed);
  std::set<std::pair<int, int>> chosen;
  for (int f = 0; f < alpha; ++f) {
    for (auto e : random_spanning_tree(n, rng)) chosen.insert(e);
  }
  EdgeList edges(chosen.begin(), chosen.end());
  shuffle_edges(edges, rng);
  // negative T: the literal edge pool, no padding
  return stream_from_edges(n, edges, T);
}

UpdateStream planted_clique_stream(int n, int clique, double p_background,
                                   std::uint64_t seed) {
  if (clique > n) throw InfeasibleT("clique larger than vertex universe");
  LaplaceSampler rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::set<std::pair<int, int>> chosen;
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j)
      chosen.insert({std::min(perm[i], perm[j]), std::max(perm[i], perm[j])});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p_background) chosen.insert({u, v});
  EdgeList edges(chosen.begin(), chosen.end());
  shuffle_edges(edges, rng);
  return stream_from_edges(n, edges, static_cast<std::int64_t>(edges.size()));
}

UpdateStream clique_with_pendants_stream(int clique, int pendants, std::uint64_t seed) {
  LaplaceSampler rng(seed);
  int n = clique + pendants;
  EdgeList edges;
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
  for (int l = 0; l < pendants; ++l)
    edges.emplace_back(l % clique, clique + l);
  shuffle_edges(edges, rng);
  return stream_from_edges(n, edges, static_cast<std::int64_t>(edges.size()));
}

long long ReductionInstance::decode(int j, long long baseline_counter,
                                    long long readout_counter) const {
  if (target == ReductionTarget::Matching) {
    // <y,q> = ||q||_0 + ||y||_0 - ||y|q||_0 and the counters report the norms
    return query_weights[j] + baseline_counter - readout_counter;
  }
  // components: ||y||_0 = 2n - baseline, ||y|q||_0 = 2n - readout
  return query_weights[j] + readout_counter - baseline_counter;
}

ReductionInstance make_reduction(const ReductionSpec& spec) {
  const int n = static_cast<int>(spec.secret.size());
  for (const auto& q : spec.queries)
    if (static_cast<int>(q.size()) != n)
      throw InfeasibleT("query dimension mismatch");
  ReductionInstance inst;
  inst.target = spec.target;
  inst.bits = n;
  UpdateStream& s = inst.stream;

  auto push = [&](const EdgeUpdate& u) { s.updates.push_back(u); };

  if (spec.target == ReductionTarget::Matching) {
    // vertices u_i = i, v_i = n+i, w_i = 2n+i
    s.n = 3 * n;
    for (int i = 0; i < n; ++i)
      push(spec.secret[i] ? EdgeUpdate::insert(i, n + i) : EdgeUpdate::noop());
    inst.baseline_time = s.length();
    for (const auto& q : spec.queries) {
      for (int i = 0; i < n; ++i)
        push(q[i] ? EdgeUpdate::insert(n + i, 2 * n + i) : EdgeUpdate::noop());
      inst.readout_times.push_back(s.length());
      for (int i = 0; i < n; ++i)
        push(q[i] ? EdgeUpdate::remove(n + i, 2 * n + i) : EdgeUpdate::noop());
    }
  } else {
    // vertices u_i = i, v_i = n+i, a_i = 2n+i, b_i = 3n+i
    s.n = 4 * n;
    for (int i = 0; i < n; ++i) push(EdgeUpdate::insert(i, 2 * n + i));
    for (int i = 0; i < n; ++i) push(EdgeUpdate::insert(n + i, 3 * n + i));
    for (int i = 0; i < n; ++i)
      push(spec.secret[i] ? EdgeUpdate::insert(2 * n + i, 3 * n + i) : EdgeUpdate::noop());
    inst.baseline_time = s.length();
    for (const auto& q : spec.queries) {
      for (int i = 0; i < n; ++i)
        push(q[i] ? EdgeUpdate::insert(i, n + i) : EdgeUpdate::noop());
      inst.readout_times.push_back(s.length());
      for (int i = 0; i < n; ++i)
        push(q[i] ? EdgeUpdate::remove(i, n + i) : EdgeUpdate::noop());
    }
  }

  for (const auto& q : spec.queries) {
    long long weight = 0;
    long long inner = 0;
    for (int i = 0; i < n; ++i) {
      weight += q[i];
      inner += q[i] & spec.secret[i];
    }
    inst.query_weights.push_back(weight);
    inst.true_inner_products.push_back(inner);
  }
  return inst;
}

std::vector<long long> decode_with_exact_counters(const ReductionInstance& inst) {
  DynamicGraph g(inst.stream.n);
  std::vector<long long> counters_at(inst.stream.length() + 1, 0);
  auto counter_now = [&]() -> long long {
    if (inst.target == ReductionTarget::Matching)
      return exact_matching_size(g.n, g.edge_list());
    return count_components(g.n, g.edge_list());
  };
  std::set<std::int64_t> checkpoints(inst.readout_times.begin(), inst.readout_times.end());
  checkpoints.insert(inst.baseline_time);
  std::int64_t t = 0;
  long long baseline = 0;
  std::vector<long long> readouts(inst.readout_times.size(), 0);
  for (const auto& u : inst.stream.updates) {
    apply_update(g, u);
    ++t;
    if (checkpoints.count(t)) {
      long long c = counter_now();
      if (t == inst.baseline_time) baseline = c;
      for (size_t j = 0; j < inst.readout_times.size(); ++j)
        if (inst.readout_times[j] == t) readouts[j] = c;
    }
  }
  std::vector<long long> decoded;
  for (size_t j = 0; j < readouts.size(); ++j)
    decoded.push_back(inst.decode(static_cast<int>(j), baseline, readouts[j]));
  return decoded;
}

ReductionSpec random_reduction_spec(int bits, int query_count, ReductionTarget target,
                                    std::uint64_t seed) {
  LaplaceSampler rng(seed);
  ReductionSpec spec;
  spec.target = target;
  spec.secret.resize(bits);
  for (auto& b : spec.secret) b = rng.uniform() < 0.5 ? 1 : 0;
  spec.queries.resize(query_count);
  for (auto& q : spec.queries) {
    q.resize(bits);
    for (auto& b : q) b = rng.uniform() < 0.5 ? 1 : 0;
  }
  return spec;
}

}  // namespace dpgs
