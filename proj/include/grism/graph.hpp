#pragma once

// Finite directed multigraphs and the finite paths of the free category
// they generate.  Everything here is immutable after construction and safe
// to share between threads.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace grism {

using VertexId = std::string;
using EdgeId   = std::string;

// A finite directed multigraph.  Edge ids are unique; endpoints must be
// declared vertices.  The free category composes edges right-to-left, so a
// path x1...xn requires d(x_i) = r(x_{i+1}): the leftmost edge is the last
// one travelled and carries the range of the whole path.
class DirectedGraph {
 public:
  struct Edge {
    EdgeId   id;
    VertexId source;  // d(e)
    VertexId target;  // r(e)
  };

  DirectedGraph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    for (auto& v : vertices) {
      if (!vertex_set_.insert(v).second)
        throw std::invalid_argument("duplicate vertex id: " + v);
    }
    for (auto& e : edges) {
      if (vertex_set_.count(e.source) == 0)
        throw std::invalid_argument("edge " + e.id +
                                    " has undeclared source vertex: " + e.source);
      if (vertex_set_.count(e.target) == 0)
        throw std::invalid_argument("edge " + e.id +
                                    " has undeclared target vertex: " + e.target);
      if (vertex_set_.count(e.id) != 0 || edge_index_.count(e.id) != 0)
        throw std::invalid_argument("duplicate id: " + e.id);
      edge_index_.emplace(e.id, e);
    }
    vertices_.assign(vertex_set_.begin(), vertex_set_.end());
    for (auto& [id, e] : edge_index_) {
      edges_.push_back(e);
      in_edges_[e.target].push_back(id);
      out_edges_[e.source].push_back(id);
    }
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const VertexId& v) const { return vertex_set_.count(v) != 0; }

  const Edge& edge(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
      throw std::invalid_argument("unknown edge id: " + id);
    return it->second;
  }

  bool has_edge(const EdgeId& id) const { return edge_index_.count(id) != 0; }

  // Edge ids e with r(e) = v, sorted by id.
  const std::vector<EdgeId>& in_edges(const VertexId& v) const {
    require_vertex(v);
    static const std::vector<EdgeId> none;
    auto it = in_edges_.find(v);
    return it == in_edges_.end() ? none : it->second;
  }

  // Edge ids e with d(e) = v, sorted by id.
  const std::vector<EdgeId>& out_edges(const VertexId& v) const {
    require_vertex(v);
    static const std::vector<EdgeId> none;
    auto it = out_edges_.find(v);
    return it == out_edges_.end() ? none : it->second;
  }

  std::size_t in_degree(const VertexId& v) const { return in_edges(v).size(); }
  std::size_t out_degree(const VertexId& v) const { return out_edges(v).size(); }

  // True when a walk along edge directions leads from `from` to `to`
  // (the empty walk counts).
  bool reaches(const VertexId& from, const VertexId& to) const {
    require_vertex(from);
    require_vertex(to);
    std::set<VertexId> seen{from};
    std::queue<VertexId> work;
    work.push(from);
    while (!work.empty()) {
      VertexId v = work.front();
      work.pop();
      if (v == to) return true;
      for (const EdgeId& id : out_edges(v)) {
        const VertexId& w = edge(id).target;
        if (seen.insert(w).second) work.push(w);
      }
    }
    return false;
  }

  void require_vertex(const VertexId& v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::set<VertexId> vertex_set_;
  std::map<EdgeId, Edge> edge_index_;                // sorted by id
  std::map<VertexId, std::vector<EdgeId>> in_edges_;  // sorted by id
  std::map<VertexId, std::vector<EdgeId>> out_edges_;
};

// Parses the line-oriented graph file format:
//   vertex <id>
//   edge <id> <source-id> <target-id>
// `#` starts a comment; vertices must precede the edges using them.
inline DirectedGraph parse_graph(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<DirectedGraph::Edge> edges;
  std::set<std::string> ids;
  std::set<VertexId> declared;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
      return std::runtime_error("graph file line " + std::to_string(lineno) +
                                ": " + msg);
    };
    if (kw == "vertex") {
      std::string id, extra;
      if (!(ls >> id)) throw fail("expected: vertex <id>");
      if (ls >> extra) throw fail("trailing tokens after vertex declaration");
      if (!ids.insert(id).second) throw fail("duplicate id: " + id);
      declared.insert(id);
      vertices.push_back(id);
    } else if (kw == "edge") {
      std::string id, src, dst, extra;
      if (!(ls >> id >> src >> dst))
        throw fail("expected: edge <id> <source-id> <target-id>");
      if (ls >> extra) throw fail("trailing tokens after edge declaration");
      if (!ids.insert(id).second) throw fail("duplicate id: " + id);
      if (declared.count(src) == 0) throw fail("undeclared vertex: " + src);
      if (declared.count(dst) == 0) throw fail("undeclared vertex: " + dst);
      edges.push_back({id, src, dst});
    } else {
      throw fail("unknown directive: " + kw);
    }
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

// A finite path: either the empty path 1_v at a vertex, or an edge sequence
// x1...xn (leftmost first) with d(x_i) = r(x_{i+1}).  Equality is
// structural.  Paths order by length, then edge ids, then base vertex, which
// gives all serialized output a stable order.
class Path {
 public:
  static Path empty_at(VertexId v) {
    Path p;
    p.base_ = std::move(v);
    return p;
  }

  static Path of_edges(const DirectedGraph& g, std::vector<EdgeId> edges) {
    if (edges.empty())
      throw std::invalid_argument("edge path needs at least one edge");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const auto& a = g.edge(edges[i]);
      const auto& b = g.edge(edges[i + 1]);
      if (a.source != b.target)
        throw std::invalid_argument("edges do not match: d(" + a.id + ") = " +
                                    a.source + " but r(" + b.id + ") = " +
                                    b.target);
    }
    Path p;
    p.edges_ = std::move(edges);
    return p;
  }

  static Path of_edge(const DirectedGraph& g, const EdgeId& id) {
    return of_edges(g, {id});
  }

  bool is_empty() const { return edges_.empty(); }
  std::size_t length() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }

  // Base vertex of an empty path; meaningless otherwise.
  const VertexId& base() const { return base_; }

  // r = target of the leftmost edge; d = source of the rightmost.
  VertexId range(const DirectedGraph& g) const {
    return is_empty() ? base_ : g.edge(edges_.front()).target;
  }
  VertexId domain(const DirectedGraph& g) const {
    return is_empty() ? base_ : g.edge(edges_.back()).source;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.edges_ == b.edges_ && a.base_ == b.base_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

 private:
  std::vector<EdgeId> edges_;
  VertexId base_;  // set only for empty paths
};

// Length, then edge ids, then base vertex.
inline int compare(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.is_empty()) return a.base().compare(b.base());
  if (a.edges() < b.edges()) return -1;
  if (b.edges() < a.edges()) return 1;
  return 0;
}

inline bool operator<(const Path& a, const Path& b) { return compare(a, b) < 0; }
inline bool path_less(const Path& a, const Path& b) { return compare(a, b) < 0; }

// Concatenation xz; requires d(x) = r(z).  Empty paths act as identities.
inline Path concat(const DirectedGraph& g, const Path& x, const Path& z) {
  if (x.domain(g) != z.range(g))
    throw std::invalid_argument("cannot concatenate: d(x) = " + x.domain(g) +
                                " differs from r(z) = " + z.range(g));
  if (x.is_empty()) return z;
  if (z.is_empty()) return x;
  std::vector<EdgeId> edges = x.edges();
  edges.insert(edges.end(), z.edges().begin(), z.edges().end());
  return Path::of_edges(g, edges);
}

enum class PrefixRel { Equal, XExtendsY, YExtendsX, Incomparable };

struct PrefixResult {
  PrefixRel rel;
  Path witness;  // z with x = yz (or y = xz); empty for Equal
};

// Prefixes are left factors: x = yz makes y a prefix of x.
inline PrefixResult prefix_comparable(const DirectedGraph& g, const Path& x,
                                      const Path& y) {
  auto strip = [&](const Path& longer, const Path& shorter)
      -> std::optional<Path> {
    if (shorter.is_empty()) {
      if (longer.range(g) != shorter.base()) return std::nullopt;
      return longer;
    }
    if (longer.length() < shorter.length()) return std::nullopt;
    if (!std::equal(shorter.edges().begin(), shorter.edges().end(),
                    longer.edges().begin()))
      return std::nullopt;
    if (longer.length() == shorter.length())
      return Path::empty_at(longer.domain(g));
    return Path::of_edges(
        g, std::vector<EdgeId>(longer.edges().begin() + shorter.length(),
                               longer.edges().end()));
  };
  if (x == y) return {PrefixRel::Equal, Path::empty_at(x.domain(g))};
  if (auto z = strip(x, y)) return {PrefixRel::XExtendsY, *z};
  if (auto z = strip(y, x)) return {PrefixRel::YExtendsX, *z};
  return {PrefixRel::Incomparable, Path::empty_at(x.domain(g))};
}

// All paths of length <= max_len, optionally filtered by endpoints
// (source = d, target = r).  Output is duplicate-free, ordered by length
// then lexicographically, and closed under left factors when unfiltered.
inline std::vector<Path> enumerate_paths(
    const DirectedGraph& g, std::size_t max_len,
    std::optional<VertexId> source = std::nullopt,
    std::optional<VertexId> target = std::nullopt) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (const VertexId& v : g.vertices()) frontier.push_back(Path::empty_at(v));
  auto keep = [&](const Path& p) {
    return (!source || p.domain(g) == *source) &&
           (!target || p.range(g) == *target);
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Path& p : frontier)
      if (keep(p)) out.push_back(p);
    if (len == max_len) break;
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (const EdgeId& a : g.in_edges(p.domain(g)))
        next.push_back(concat(g, p, Path::of_edge(g, a)));
    std::sort(next.begin(), next.end(), path_less);
    frontier = std::move(next);
  }
  return out;
}

// A vertex every other vertex can reach (possibly by the empty path).
inline std::optional<VertexId> has_root(const DirectedGraph& g) {
  for (const VertexId& cand : g.vertices()) {
    bool ok = true;
    for (const VertexId& v : g.vertices())
      if (!g.reaches(v, cand)) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, const Path& p) {
  if (p.is_empty()) return os << "1_" << p.base();
  for (const EdgeId& e : p.edges()) os << e;
  return os;
}

}  // namespace grism
