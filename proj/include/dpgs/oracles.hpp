#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dpgs {

// Exact fraction with normalized sign and gcd-reduced terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

using EdgeList = std::vector<std::pair<int, int>>;

// ---------------------------------------------------------------------------
// Maximum matching (general graphs, blossom contraction). Supports incremental
// insertion-only use: each inserted edge triggers at most one augmentation.
class GeneralMatching {
 public:
  explicit GeneralMatching(int n);

  // Returns true when the matching grew.
  bool add_edge(int u, int v);
  int size() const { return size_; }
  const std::vector<int>& mates() const { return match_; }

 private:
  bool augment_from(int root);
  int lca(int a, int b) const;
  void mark_path(int v, int b, int child, std::vector<char>& blossom);

  int n_;
  int size_ = 0;
  std::vector<std::vector<int>> g_;
  std::vector<int> match_, parent_, base_;
  mutable std::vector<char> used_;
};

int exact_matching_size(int n, const EdgeList& edges);

// Greedy maximal matching under the given edge order (fixed-order referee).
int greedy_matching_size(int n, const EdgeList& edges_in_order);

// ---------------------------------------------------------------------------
// Exact max flow (Dinic) over integer capacities.
class MaxFlowNetwork {
 public:
  explicit MaxFlowNetwork(int node_count);

  void add_arc(int from, int to, long long capacity);
  long long run(int s, int t);
  // Source side of a minimum cut; valid after run().
  std::vector<char> min_cut_side(int s) const;

  int nodes() const { return static_cast<int>(g_.size()); }
  long long arcs_added() const { return arcs_added_; }

  static constexpr long long kInf = (1LL << 60);

 private:
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  bool bfs(int s, int t);
  long long dfs(int v, int t, long long pushed);

  std::vector<std::vector<Arc>> g_;
  std::vector<int> level_, iter_;
  long long arcs_added_ = 0;
};

// The density feasibility gadget: source, one node per edge, one node per
// vertex, sink. Unit arcs source->edge scaled so vertex->sink arcs carry the
// exact rational guess lambda = num/den.
struct DensityCutResult {
  bool denser_exists = false;
  std::vector<int> witness;  // subgraph with density > lambda, when one exists
};
DensityCutResult density_cut_probe(int n, const EdgeList& edges, const Rational& lambda);

struct DensestResult {
  Rational density;
  std::vector<int> witness;
};

// Exact densest-subgraph density and a witness subset: binary search on the
// guess down to the 1/(n(n-1)) separation, then the witness density is
// recomputed exactly. Empty graph: density 0 with the full vertex set.
DensestResult exact_density(int n, const EdgeList& edges);

Rational subset_density(const EdgeList& edges, const std::vector<int>& subset);

// Density tracker for a slowly changing edge set: insertions advance the
// current witness through flow probes; rebuilds reseed from a peel pass.
class DensestTracker {
 public:
  explicit DensestTracker(int n);

  void add_edge(int u, int v);
  void rebuild(const EdgeList& edges);
  const DensestResult& current();  // exact for the edges seen so far
  const EdgeList& edges() const { return edges_; }

 private:
  void settle();
  int n_;
  EdgeList edges_;
  DensestResult best_;
  bool dirty_ = true;
};

// Charikar-style min-degree peel; returns the best prefix density seen.
DensestResult peel_density_estimate(int n, const EdgeList& edges);

// ---------------------------------------------------------------------------
std::vector<int> exact_core_numbers(int n, const EdgeList& edges);
int degeneracy(int n, const EdgeList& edges);
std::pair<int, int> arboricity_bracket(int n, const EdgeList& edges);

// Exact minimum vertex cover size by branch and bound; n <= 20 or TooLarge.
int exact_min_vertex_cover(int n, const EdgeList& edges);

int count_components(int n, const EdgeList& edges);

}  // namespace dpgs
