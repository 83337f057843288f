#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace dpgs {

// One timestamped update of an edge stream. Vertices are dense ids in [0, n);
// endpoints are stored normalized (u < v). Noop carries no endpoints.
struct EdgeUpdate {
  enum class Kind { Insert, Delete, Noop };

  Kind kind = Kind::Noop;
  int u = -1;
  int v = -1;

  static EdgeUpdate noop() { return {}; }
  static EdgeUpdate insert(int a, int b);
  static EdgeUpdate remove(int a, int b);

  bool is_noop() const { return kind == Kind::Noop; }
  bool operator==(const EdgeUpdate& o) const {
    return kind == o.kind && u == o.u && v == o.v;
  }
  bool touches(int w) const { return !is_noop() && (u == w || v == w); }
};

std::uint64_t edge_key(int u, int v);

// A length-T stream over a declared vertex universe of size n. T is the
// literal number of updates; timestamps in files are 1..T.
struct UpdateStream {
  int n = 0;
  std::vector<EdgeUpdate> updates;

  std::int64_t length() const { return static_cast<std::int64_t>(updates.size()); }
  bool insertion_only() const;
  bool has_delete() const { return !insertion_only(); }
};

// Adjacency-set graph that the streams evolve.
struct DynamicGraph {
  explicit DynamicGraph(int n = 0);

  int n = 0;
  long long m = 0;
  std::vector<std::unordered_set<int>> adjacency;
  std::vector<int> degrees;

  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edge_list() const;  // sorted, deterministic
};

// Applies one update in place. Re-inserting a present edge throws
// DuplicateInsert; deleting a missing edge throws MissingDelete; Noop is
// the identity.
void apply_update(DynamicGraph& g, const EdgeUpdate& u);

DynamicGraph replay(const UpdateStream& s);
DynamicGraph build_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Neighboring pairs per the continual-release model: the second stream of an
// edge pair blanks exactly position t_star (1-based); a node pair blanks every
// update incident to v_star.
std::pair<UpdateStream, UpdateStream> edge_neighbor_pair(const UpdateStream& s,
                                                         std::int64_t t_star);
std::pair<UpdateStream, UpdateStream> node_neighbor_pair(const UpdateStream& s,
                                                         int v_star);

std::int64_t differing_positions(const UpdateStream& a, const UpdateStream& b);

// Text format: header "# n=<n> T=<T>", then one update per line:
// "t INS u v", "t DEL u v", or "t NOP" with t running 1..T in order.
UpdateStream parse_stream(const std::string& text);
std::string serialize_stream(const UpdateStream& s);
UpdateStream read_stream_file(const std::string& path);
void write_stream_file(const std::string& path, const UpdateStream& s);

}  // namespace dpgs
