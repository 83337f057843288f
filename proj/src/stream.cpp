#include "dpgs/stream.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dpgs/errors.hpp"

namespace dpgs {

EdgeUpdate EdgeUpdate::insert(int a, int b) {
  if (a == b) throw ParseError("self-loop update");
  if (a > b) std::swap(a, b);
  return {Kind::Insert, a, b};
}

EdgeUpdate EdgeUpdate::remove(int a, int b) {
  if (a == b) throw ParseError("self-loop update");
  if (a > b) std::swap(a, b);
  return {Kind::Delete, a, b};
}

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool UpdateStream::insertion_only() const {
  for (const auto& u : updates)
    if (u.kind == EdgeUpdate::Kind::Delete) return false;
  return true;
}

DynamicGraph::DynamicGraph(int n_) : n(n_), adjacency(n_), degrees(n_, 0) {}

bool DynamicGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n) return false;
  return adjacency[u].count(v) > 0;
}

std::vector<std::pair<int, int>> DynamicGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m));
  for (int u = 0; u < n; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

void apply_update(DynamicGraph& g, const EdgeUpdate& u) {
  switch (u.kind) {
    case EdgeUpdate::Kind::Noop:
      return;
    case EdgeUpdate::Kind::Insert:
      if (g.has_edge(u.u, u.v))
        throw DuplicateInsert("insert of existing edge {" + std::to_string(u.u) +
                              "," + std::to_string(u.v) + "}");
      g.adjacency[u.u].insert(u.v);
      g.adjacency[u.v].insert(u.u);
      ++g.degrees[u.u];
      ++g.degrees[u.v];
      ++g.m;
      return;
    case EdgeUpdate::Kind::Delete:
      if (!g.has_edge(u.u, u.v))
        throw MissingDelete("delete of missing edge {" + std::to_string(u.u) + "," +
                            std::to_string(u.v) + "}");
      g.adjacency[u.u].erase(u.v);
      g.adjacency[u.v].erase(u.u);
      --g.degrees[u.u];
      --g.degrees[u.v];
      --g.m;
      return;
  }
}

DynamicGraph replay(const UpdateStream& s) {
  DynamicGraph g(s.n);
  for (const auto& u : s.updates) apply_update(g, u);
  return g;
}

DynamicGraph build_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  DynamicGraph g(n);
  for (auto [a, b] : edges) apply_update(g, EdgeUpdate::insert(a, b));
  return g;
}

std::pair<UpdateStream, UpdateStream> edge_neighbor_pair(const UpdateStream& s,
                                                         std::int64_t t_star) {
  if (t_star < 1 || t_star > s.length())
    throw IndexOutOfRange("t_star " + std::to_string(t_star) + " outside [1," +
                          std::to_string(s.length()) + "]");
  if (s.updates[t_star - 1].is_noop())
    throw AlreadyNoop("update at t_star is already empty");
  UpdateStream other = s;
  other.updates[t_star - 1] = EdgeUpdate::noop();
  return {s, other};
}

std::pair<UpdateStream, UpdateStream> node_neighbor_pair(const UpdateStream& s,
                                                         int v_star) {
  UpdateStream other = s;
  for (auto& u : other.updates)
    if (u.touches(v_star)) u = EdgeUpdate::noop();
  return {s, other};
}

std::int64_t differing_positions(const UpdateStream& a, const UpdateStream& b) {
  std::int64_t d = std::llabs(a.length() - b.length());
  std::int64_t t = std::min(a.length(), b.length());
  for (std::int64_t i = 0; i < t; ++i)
    if (!(a.updates[i] == b.updates[i])) ++d;
  return d;
}

UpdateStream parse_stream(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  UpdateStream s;
  std::int64_t declared_t = -1;
  std::int64_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!have_header) {
      long long n = 0, t = 0;
      if (std::sscanf(line.c_str(), "# n=%lld T=%lld", &n, &t) != 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header '# n=<n> T=<T>'");
      if (n < 0 || t < 0) throw ParseError("negative n or T in header");
      s.n = static_cast<int>(n);
      declared_t = t;
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::int64_t t = 0;
    std::string op;
    if (!(ls >> t >> op))
      throw ParseError("line " + std::to_string(line_no) + ": malformed update");
    if (t != s.length() + 1)
      throw ParseError("line " + std::to_string(line_no) + ": timestamp " +
                       std::to_string(t) + " out of order");
    if (op == "NOP") {
      s.updates.push_back(EdgeUpdate::noop());
    } else if (op == "INS" || op == "DEL") {
      int u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ParseError("line " + std::to_string(line_no) + ": missing endpoints");
      if (u < 0 || v < 0 || u >= s.n || v >= s.n)
        throw ParseError("line " + std::to_string(line_no) + ": vertex outside [0,n)");
      s.updates.push_back(op == "INS" ? EdgeUpdate::insert(u, v)
                                      : EdgeUpdate::remove(u, v));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown op '" + op + "'");
    }
  }
  if (!have_header) throw ParseError("missing stream header");
  if (declared_t != s.length())
    throw ParseError("header declares T=" + std::to_string(declared_t) + " but " +
                     std::to_string(s.length()) + " updates follow");
  return s;
}

std::string serialize_stream(const UpdateStream& s) {
  std::ostringstream out;
  out << "# n=" << s.n << " T=" << s.length() << "\n";
  for (std::int64_t t = 0; t < s.length(); ++t) {
    const auto& u = s.updates[t];
    out << (t + 1) << ' ';
    switch (u.kind) {
      case EdgeUpdate::Kind::Noop:
        out << "NOP";
        break;
      case EdgeUpdate::Kind::Insert:
        out << "INS " << u.u << ' ' << u.v;
        break;
      case EdgeUpdate::Kind::Delete:
        out << "DEL " << u.u << ' ' << u.v;
        break;
    }
    out << '\n';
  }
  return out.str();
}

UpdateStream read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stream file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_stream(buf.str());
}

void write_stream_file(const std::string& path, const UpdateStream& s) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write stream file " + path);
  out << serialize_stream(s);
}

}  // namespace dpgs
