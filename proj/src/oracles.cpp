#include "dpgs/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "dpgs/errors.hpp"

namespace dpgs {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

// ---------------------------------------------------------------------------
// Blossom matching.

GeneralMatching::GeneralMatching(int n)
    : n_(n), g_(n), match_(n, -1), parent_(n, -1), base_(n), used_(n, 0) {}

int GeneralMatching::lca(int a, int b) const {
  std::vector<char> seen(n_, 0);
  for (;;) {
    a = base_[a];
    seen[a] = 1;
    if (match_[a] == -1) break;
    a = parent_[match_[a]];
  }
  for (;;) {
    b = base_[b];
    if (seen[b]) return b;
    b = parent_[match_[b]];
  }
}

void GeneralMatching::mark_path(int v, int b, int child, std::vector<char>& blossom) {
  while (base_[v] != b) {
    blossom[base_[v]] = 1;
    blossom[base_[match_[v]]] = 1;
    parent_[v] = child;
    child = match_[v];
    v = parent_[match_[v]];
  }
}

bool GeneralMatching::augment_from(int root) {
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  std::iota(base_.begin(), base_.end(), 0);

  used_[root] = 1;
  std::queue<int> q;
  q.push(root);
  int finish = -1;
  while (!q.empty() && finish == -1) {
    int v = q.front();
    q.pop();
    for (int to : g_[v]) {
      if (base_[v] == base_[to] || match_[v] == to) continue;
      if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
        // odd cycle: contract the blossom
        int cur = lca(v, to);
        std::vector<char> blossom(n_, 0);
        mark_path(v, cur, to, blossom);
        mark_path(to, cur, v, blossom);
        for (int i = 0; i < n_; ++i) {
          if (blossom[base_[i]]) {
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        }
      } else if (parent_[to] == -1) {
        parent_[to] = v;
        if (match_[to] == -1) {
          finish = to;
          break;
        }
        used_[match_[to]] = 1;
        q.push(match_[to]);
      }
    }
  }
  if (finish == -1) return false;
  // flip along the found alternating path
  int v = finish;
  while (v != -1) {
    int pv = parent_[v];
    int ppv = match_[pv];
    match_[v] = pv;
    match_[pv] = v;
    v = ppv;
  }
  return true;
}

bool GeneralMatching::add_edge(int u, int v) {
  g_[u].push_back(v);
  g_[v].push_back(u);
  // A maximum matching stays maximum unless an augmenting path uses the new
  // edge; one search round over the free vertices finds it if present.
  if (match_[u] == -1 && match_[v] == -1) {
    match_[u] = v;
    match_[v] = u;
    ++size_;
    return true;
  }
  for (int root = 0; root < n_; ++root) {
    if (match_[root] != -1) continue;
    if (augment_from(root)) {
      ++size_;
      return true;
    }
  }
  return false;
}

int exact_matching_size(int n, const EdgeList& edges) {
  GeneralMatching gm(n);
  for (auto [u, v] : edges) gm.add_edge(u, v);
  return gm.size();
}

int greedy_matching_size(int n, const EdgeList& edges_in_order) {
  std::vector<char> used(n, 0);
  int size = 0;
  for (auto [u, v] : edges_in_order) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      ++size;
    }
  }
  return size;
}

// ---------------------------------------------------------------------------
// Dinic.

MaxFlowNetwork::MaxFlowNetwork(int node_count)
    : g_(node_count), level_(node_count), iter_(node_count) {}

void MaxFlowNetwork::add_arc(int from, int to, long long capacity) {
  g_[from].push_back({to, capacity, static_cast<int>(g_[to].size())});
  g_[to].push_back({from, 0, static_cast<int>(g_[from].size()) - 1});
  ++arcs_added_;
}

bool MaxFlowNetwork::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& a : g_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

long long MaxFlowNetwork::dfs(int v, int t, long long pushed) {
  if (v == t) return pushed;
  for (int& i = iter_[v]; i < static_cast<int>(g_[v].size()); ++i) {
    Arc& a = g_[v][i];
    if (a.cap > 0 && level_[v] < level_[a.to]) {
      long long d = dfs(a.to, t, std::min(pushed, a.cap));
      if (d > 0) {
        a.cap -= d;
        g_[a.to][a.rev].cap += d;
        return d;
      }
    }
  }
  return 0;
}

long long MaxFlowNetwork::run(int s, int t) {
  long long flow = 0;
  while (bfs(s, t)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (long long f = dfs(s, t, kInf)) flow += f;
  }
  return flow;
}

std::vector<char> MaxFlowNetwork::min_cut_side(int s) const {
  std::vector<char> side(g_.size(), 0);
  std::queue<int> q;
  side[s] = 1;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& a : g_[v]) {
      if (a.cap > 0 && !side[a.to]) {
        side[a.to] = 1;
        q.push(a.to);
      }
    }
  }
  return side;
}

// ---------------------------------------------------------------------------
// Densest subgraph via flow probes.

DensityCutResult density_cut_probe(int n, const EdgeList& edges, const Rational& lambda) {
  long long m = static_cast<long long>(edges.size());
  // nodes: 0 = source, 1..m edge nodes, m+1..m+n vertex nodes, m+n+1 = sink
  int source = 0, sink = static_cast<int>(m) + n + 1;
  MaxFlowNetwork net(static_cast<int>(m) + n + 2);
  // capacities scaled by lambda.den so everything stays integral
  for (int i = 0; i < m; ++i) {
    net.add_arc(source, 1 + i, lambda.den);
    net.add_arc(1 + i, static_cast<int>(m) + 1 + edges[i].first, MaxFlowNetwork::kInf);
    net.add_arc(1 + i, static_cast<int>(m) + 1 + edges[i].second, MaxFlowNetwork::kInf);
  }
  for (int v = 0; v < n; ++v) net.add_arc(static_cast<int>(m) + 1 + v, sink, lambda.num);
  long long flow = net.run(source, sink);
  DensityCutResult res;
  if (flow >= m * lambda.den) return res;  // no subgraph denser than lambda
  res.denser_exists = true;
  std::vector<char> side = net.min_cut_side(source);
  for (int v = 0; v < n; ++v)
    if (side[static_cast<int>(m) + 1 + v]) res.witness.push_back(v);
  return res;
}

Rational subset_density(const EdgeList& edges, const std::vector<int>& subset) {
  if (subset.empty()) return Rational(0, 1);
  std::vector<char> in(1 + *std::max_element(subset.begin(), subset.end()), 0);
  for (int v : subset) in[v] = 1;
  long long inside = 0;
  for (auto [u, v] : edges) {
    if (u < static_cast<int>(in.size()) && v < static_cast<int>(in.size()) && in[u] && in[v])
      ++inside;
  }
  return Rational(inside, static_cast<long long>(subset.size()));
}

DensestResult peel_density_estimate(int n, const EdgeList& edges) {
  DensestResult best;
  best.density = Rational(0, 1);
  for (int v = 0; v < n; ++v) best.witness.push_back(v);
  if (edges.empty() || n == 0) return best;

  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
  }
  std::vector<char> removed(n, 0);
  std::vector<int> order;
  // min-degree peel
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (int v = 0; v < n; ++v) pq.push({deg[v], v});
  long long m_left = static_cast<long long>(edges.size());
  int n_left = n;
  Rational best_density(static_cast<long long>(edges.size()), n);
  int best_prefix = 0;  // number of removals before the best remainder
  int removals = 0;
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (removed[v] || d != deg[v]) continue;
    removed[v] = 1;
    order.push_back(v);
    ++removals;
    m_left -= deg[v];
    --n_left;
    for (int w : adj[v]) {
      if (!removed[w]) {
        --deg[w];
        pq.push({deg[w], w});
      }
    }
    if (n_left > 0) {
      Rational cand(m_left, n_left);
      if (best_density < cand) {
        best_density = cand;
        best_prefix = removals;
      }
    }
  }
  std::vector<char> gone(n, 0);
  for (int i = 0; i < best_prefix; ++i) gone[order[i]] = 1;
  best.witness.clear();
  for (int v = 0; v < n; ++v)
    if (!gone[v]) best.witness.push_back(v);
  best.density = subset_density(edges, best.witness);
  return best;
}

DensestResult exact_density(int n, const EdgeList& edges) {
  DensestResult res;
  if (edges.empty()) {
    res.density = Rational(0, 1);
    for (int v = 0; v < n; ++v) res.witness.push_back(v);
    return res;
  }
  long long m = static_cast<long long>(edges.size());
  // Feasible start: the whole graph. Then binary search the guess over
  // [m/n, n/2] until the interval is below the 1/(n(n-1)) separation between
  // distinct subgraph densities, keeping the best witness seen.
  res.density = Rational(m, n);
  res.witness.clear();
  for (int v = 0; v < n; ++v) res.witness.push_back(v);

  double lo = res.density.value();
  double hi = static_cast<double>(n) / 2.0;
  double gap = 1.0 / (static_cast<double>(n) * std::max(1, n - 1));
  while (hi - lo > gap) {
    double mid = (lo + hi) / 2.0;
    // carry the guess as an exact fraction with a power-of-two denominator
    long long den = 1LL << 24;
    Rational lambda(static_cast<long long>(mid * static_cast<double>(den)), den);
    DensityCutResult probe = density_cut_probe(n, edges, lambda);
    if (probe.denser_exists) {
      Rational got = subset_density(edges, probe.witness);
      if (res.density < got) {
        res.density = got;
        res.witness = probe.witness;
      }
      lo = std::max(mid, got.value());
    } else {
      hi = mid;
    }
  }
  // The witness is optimal once no subgraph beats its exact density.
  for (;;) {
    DensityCutResult probe = density_cut_probe(n, edges, res.density);
    if (!probe.denser_exists) break;
    Rational got = subset_density(edges, probe.witness);
    if (!(res.density < got)) break;
    res.density = got;
    res.witness = probe.witness;
  }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

DensestTracker::DensestTracker(int n) : n_(n) {
  best_.density = Rational(0, 1);
  for (int v = 0; v < n; ++v) best_.witness.push_back(v);
  dirty_ = false;
}

void DensestTracker::add_edge(int u, int v) {
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  dirty_ = true;
}

void DensestTracker::rebuild(const EdgeList& edges) {
  edges_ = edges;
  best_ = peel_density_estimate(n_, edges_);
  dirty_ = true;
  settle();
}

void DensestTracker::settle() {
  // Insertions only raise the optimum; walk the witness upward until no
  // strictly denser subgraph exists.
  if (edges_.empty()) {
    best_.density = Rational(0, 1);
    best_.witness.clear();
    for (int v = 0; v < n_; ++v) best_.witness.push_back(v);
    dirty_ = false;
    return;
  }
  for (;;) {
    DensityCutResult probe = density_cut_probe(n_, edges_, best_.density);
    if (!probe.denser_exists) break;
    Rational got = subset_density(edges_, probe.witness);
    if (!(best_.density < got)) break;
    best_.density = got;
    best_.witness = probe.witness;
  }
  dirty_ = false;
}

const DensestResult& DensestTracker::current() {
  if (dirty_) settle();
  return best_;
}

// ---------------------------------------------------------------------------

std::vector<int> exact_core_numbers(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
  }
  // bucket peel in nondecreasing degree order
  int maxd = 0;
  for (int v = 0; v < n; ++v) maxd = std::max(maxd, deg[v]);
  std::vector<std::vector<int>> bins(maxd + 1);
  for (int v = 0; v < n; ++v) bins[deg[v]].push_back(v);
  std::vector<int> core(n, 0);
  std::vector<char> done(n, 0);
  std::vector<int> cur = deg;
  int level = 0;
  int processed = 0;
  while (processed < n) {
    int d = 0;
    while (d <= maxd && bins[d].empty()) ++d;
    if (d > maxd) break;
    int v = bins[d].back();
    bins[d].pop_back();
    if (done[v] || cur[v] != d) continue;
    level = std::max(level, d);
    core[v] = level;
    done[v] = 1;
    ++processed;
    for (int w : adj[v]) {
      if (!done[w]) {
        --cur[w];
        bins[std::max(cur[w], 0)].push_back(w);
      }
    }
  }
  return core;
}

int degeneracy(int n, const EdgeList& edges) {
  auto core = exact_core_numbers(n, edges);
  int k = 0;
  for (int v : core) k = std::max(k, v);
  return k;
}

std::pair<int, int> arboricity_bracket(int n, const EdgeList& edges) {
  int k_max = degeneracy(n, edges);
  return {(k_max + 1) / 2, k_max};
}

namespace {

int mvc_branch(std::vector<std::vector<int>>& adj, std::vector<char>& removed, int taken,
               int best) {
  if (taken >= best) return best;
  // pick the uncovered edge at a max-degree endpoint
  int pick = -1, pick_deg = -1;
  int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    int d = 0;
    for (int w : adj[v])
      if (!removed[w]) ++d;
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  if (pick_deg <= 0) return std::min(best, taken);
  if (pick_deg == 1) {
    // only disjoint single edges can remain after repeated application
    int extra = 0;
    std::vector<char> seen(removed);
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      for (int w : adj[v]) {
        if (!seen[w]) {
          ++extra;
          seen[v] = seen[w] = 1;
          break;
        }
      }
    }
    return std::min(best, taken + extra);
  }
  // branch: take pick, or take all of pick's active neighborhood
  removed[pick] = 1;
  best = mvc_branch(adj, removed, taken + 1, best);
  removed[pick] = 0;
  std::vector<int> nbrs;
  for (int w : adj[pick])
    if (!removed[w]) nbrs.push_back(w);
  for (int w : nbrs) removed[w] = 1;
  best = mvc_branch(adj, removed, taken + static_cast<int>(nbrs.size()), best);
  for (int w : nbrs) removed[w] = 0;
  return best;
}

}  // namespace

int exact_min_vertex_cover(int n, const EdgeList& edges) {
  if (n > 20) throw TooLarge("vertex cover oracle limited to n <= 20");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> removed(n, 0);
  return mvc_branch(adj, removed, 0, n);
}

int count_components(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int comps = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace dpgs
