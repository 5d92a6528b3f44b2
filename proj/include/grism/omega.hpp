#pragma once

// The concrete model on the space of right-infinite paths: a partial
// bijection represented by a finite list of (image, domain) cylinder pairs,
// where the pair (x, y) maps y w' to x w'.  Infinite paths are never
// materialized; equality and composition work on uniform-depth refinements,
// which is sound because distinct equal-length domain paths give disjoint
// cylinders and, with every in-degree at least 2, a cylinder determines its
// prefix.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grism/ck.hpp"
#include "grism/ortho.hpp"
#include "grism/refine.hpp"

namespace grism {

class CylinderMap {
 public:
  CylinderMap() = default;  // the empty map

  static CylinderMap make(const DirectedGraph& g,
                          std::vector<std::pair<Path, Path>> pairs) {
    for (const auto& [x, y] : pairs)
      if (x.domain(g) != y.domain(g))
        throw std::invalid_argument("cylinder pair paths are not coterminal");
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (prefix_comparable(g, pairs[i].second, pairs[j].second).rel !=
            PrefixRel::Incomparable)
          throw std::invalid_argument("domain cylinders overlap");
        if (prefix_comparable(g, pairs[i].first, pairs[j].first).rel !=
            PrefixRel::Incomparable)
          throw std::invalid_argument("image cylinders overlap");
      }
    CylinderMap m;
    m.pairs_ = std::move(pairs);
    std::sort(m.pairs_.begin(), m.pairs_.end(), detail::pair_less);
    return m;
  }

  bool is_empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Path, Path>>& pairs() const { return pairs_; }

  std::size_t max_domain_length() const {
    return detail::max_domain_length(pairs_);
  }

 private:
  std::vector<std::pair<Path, Path>> pairs_;  // sorted (image, domain)
};

inline void require_omega_graph(const DirectedGraph& g) { require_ck_graph(g); }

// The partial bijection generated by an orthogonal set: each member x y^-1
// contributes the pair (x, y).
inline CylinderMap from_ortho_set(const DirectedGraph& g, const OrthoSet& a) {
  require_omega_graph(g);
  std::vector<std::pair<Path, Path>> pairs;
  for (const GisElement& s : a) pairs.emplace_back(s.left(), s.right());
  return CylinderMap::make(g, std::move(pairs));
}

// Refines every pair to domain length `depth` without changing the
// represented partial bijection; depth must be at least the current
// maximum domain length.
inline CylinderMap refine(const DirectedGraph& g, const CylinderMap& m,
                          std::size_t depth) {
  if (depth < m.max_domain_length())
    throw std::invalid_argument("refinement depth below current maximum");
  return CylinderMap::make(g, detail::refine_pairs(g, m.pairs(), depth));
}

inline bool maps_equal(const DirectedGraph& g, const CylinderMap& a,
                       const CylinderMap& b) {
  require_omega_graph(g);
  std::size_t depth = std::max(a.max_domain_length(), b.max_domain_length());
  return detail::refine_pairs(g, a.pairs(), depth) ==
         detail::refine_pairs(g, b.pairs(), depth);
}

inline CylinderMap invert(const DirectedGraph& g, const CylinderMap& m) {
  std::vector<std::pair<Path, Path>> pairs;
  for (const auto& [x, y] : m.pairs()) pairs.emplace_back(y, x);
  return CylinderMap::make(g, std::move(pairs));
}

// Composition of partial bijections, first applying `second`.  Both maps
// are refined so the inner cylinders meet at one uniform depth: the
// composite picks up the pair (x1, y2) exactly when the refined image of
// (x2, y2) equals the refined domain of (x1, y1).
inline CylinderMap compose(const DirectedGraph& g, const CylinderMap& first,
                           const CylinderMap& second) {
  require_omega_graph(g);
  std::size_t inner = 0;
  for (const auto& pr : first.pairs())
    inner = std::max(inner, pr.second.length());
  for (const auto& pr : second.pairs())
    inner = std::max(inner, pr.first.length());
  auto rf = detail::refine_pairs(g, first.pairs(), inner);
  // Refine the second map on its image side by running the refinement on
  // the swapped pairs.
  std::vector<detail::PathPair> swapped;
  for (const auto& [x, y] : second.pairs()) swapped.emplace_back(y, x);
  auto rs_swapped = detail::refine_pairs(g, swapped, inner);
  std::vector<std::pair<Path, Path>> out;
  for (const auto& [x1, y1] : rf)
    for (const auto& [y2, x2] : rs_swapped)
      if (x2 == y1) out.emplace_back(x1, y2);
  return CylinderMap::make(g, std::move(out));
}

// Image of a long-enough finite prefix: if w_prefix = y w'' for a domain
// path y, the result is x w''.  Prefixes shorter than the deepest domain
// cylinder are rejected since membership is undecidable for them.
inline std::optional<Path> apply(const DirectedGraph& g, const CylinderMap& m,
                                 const Path& w_prefix) {
  if (w_prefix.length() < m.max_domain_length())
    throw std::invalid_argument(
        "prefix shorter than the deepest domain cylinder");
  for (const auto& [x, y] : m.pairs()) {
    PrefixResult pr = prefix_comparable(g, w_prefix, y);
    if (pr.rel == PrefixRel::Equal) return x;
    if (pr.rel == PrefixRel::XExtendsY) return concat(g, x, pr.witness);
  }
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, const CylinderMap& m) {
  os << "[";
  bool sep = false;
  for (const auto& [x, y] : m.pairs()) {
    if (sep) os << "; ";
    os << y << " -> " << x;
    sep = true;
  }
  return os << "]";
}

}  // namespace grism
