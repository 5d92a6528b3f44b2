#pragma once

// Shared fixtures: the small graphs every suite exercises.

#include <string>
#include <vector>

#include "grism/element.hpp"
#include "grism/expr.hpp"
#include "grism/graph.hpp"

namespace grism::testing {

// One vertex, one loop.
inline const DirectedGraph& p1() {
  static DirectedGraph g = parse_graph("vertex v\nedge a v v\n");
  return g;
}

// One vertex, two loops.
inline const DirectedGraph& p2() {
  static DirectedGraph g = parse_graph("vertex v\nedge a v v\nedge b v v\n");
  return g;
}

// Two vertices with double edges both ways; every in-degree is 2.
inline const DirectedGraph& double_cycle() {
  static DirectedGraph g = parse_graph(
      "vertex u\nvertex v\n"
      "edge e1 u v\nedge e2 u v\n"
      "edge f1 v u\nedge f2 v u\n");
  return g;
}

// Two vertices with single edges both ways; every in-degree is 1.
inline const DirectedGraph& two_cycle() {
  static DirectedGraph g = parse_graph(
      "vertex u\nvertex v\n"
      "edge e u v\nedge f v u\n");
  return g;
}

// Three levels, double edges between consecutive levels, root r.
inline const DirectedGraph& bratteli_b() {
  static DirectedGraph g = parse_graph(
      "vertex r\nvertex p\nvertex q\n"
      "edge g1 p r\nedge g2 p r\n"
      "edge h1 q p\nedge h2 q p\n");
  return g;
}

inline Path path_of(const DirectedGraph& g, const std::vector<EdgeId>& ids) {
  if (ids.empty()) throw std::invalid_argument("use Path::empty_at");
  return Path::of_edges(g, ids);
}

inline GisElement el(const DirectedGraph& g, const std::string& text) {
  return parse_element(g, text);
}

inline OrthoSet os(const DirectedGraph& g, const std::string& text) {
  return parse_ortho(g, text);
}

}  // namespace grism::testing
