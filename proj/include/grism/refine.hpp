#pragma once

// Uniform-depth refinement of (image, domain) path pairs.  Replacing a pair
// (x, y) by {(xp, yp) : r(p) = d(x), |yp| = depth} leaves the represented
// partial bijection of the infinite-path space unchanged; at a uniform
// domain depth two representations are equal exactly when their pair sets
// coincide.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grism/graph.hpp"

namespace grism::detail {

using PathPair = std::pair<Path, Path>;  // (image x, domain y)

inline bool pair_less(const PathPair& a, const PathPair& b) {
  int c = compare(a.first, b.first);
  if (c != 0) return c < 0;
  return compare(a.second, b.second) < 0;
}

// All extensions p of the stem with r(p) = `at` and |p| = len.
inline std::vector<Path> extensions(const DirectedGraph& g, const VertexId& at,
                                    std::size_t len) {
  std::vector<Path> out{Path::empty_at(at)};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Path> next;
    for (const Path& p : out) {
      const auto& ins = g.in_edges(p.domain(g));
      if (ins.empty())
        throw std::runtime_error(
            "depth expansion impossible: vertex " + p.domain(g) +
            " has in-degree 0");
      for (const EdgeId& e : ins)
        next.push_back(concat(g, p, Path::of_edge(g, e)));
    }
    out = std::move(next);
  }
  return out;
}

// Refines every pair so its domain path has length exactly `depth`;
// requires depth >= every current domain length.
inline std::vector<PathPair> refine_pairs(const DirectedGraph& g,
                                          const std::vector<PathPair>& pairs,
                                          std::size_t depth) {
  std::vector<PathPair> out;
  for (const auto& [x, y] : pairs) {
    if (y.length() > depth)
      throw std::invalid_argument("refinement depth " + std::to_string(depth) +
                                  " is below an existing domain length");
    for (const Path& p : extensions(g, x.domain(g), depth - y.length()))
      out.emplace_back(concat(g, x, p), concat(g, y, p));
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

inline std::size_t max_domain_length(const std::vector<PathPair>& pairs) {
  std::size_t m = 0;
  for (const auto& pr : pairs) m = std::max(m, pr.second.length());
  return m;
}

}  // namespace grism::detail
