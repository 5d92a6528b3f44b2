#pragma once

// Terminating decision procedures for the arrow relation a -> B ("every
// nonzero element below a meets some member of B"), the derived preorder
// and equivalence on orthogonal sets, and canonical-form reduction.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "grism/ortho.hpp"

namespace grism {

inline constexpr std::size_t kDefaultArrowDepthCap = 64;

struct ArrowWitness {
  bool holds = true;
  // When the arrow fails: the extension path p such that (xp)(yp)^-1 is a
  // nonzero element below the source meeting no target.
  Path fail_path;
  explicit operator bool() const { return holds; }
};

// Decides a -> (b_1, ..., b_n) by breadth-first search over extension paths
// p with r(p) = d(x), where a = x y^-1.  At the node p, write
// c = (xp)(yp)^-1:
//   - c below some target: the whole subtree stays below that target, prune;
//   - c comparable with no target: every meet is zero, fail with witness p;
//   - some target strictly below c: recurse on every one-edge extension
//     (a branch with no extensions is satisfied, c itself meets the target).
// The strict case forces |xp| < max |u_j|, so the search terminates; the
// cap only guards against misuse.  Breadth-first order makes a returned
// witness least by length then lexicographic edge ids.
inline ArrowWitness arrow(const DirectedGraph& g, const GisElement& a,
                          std::span<const GisElement> targets,
                          std::size_t depth_cap = kDefaultArrowDepthCap) {
  a.require_nonzero();
  for (const GisElement& b : targets) b.require_nonzero();

  std::deque<Path> work;
  work.push_back(Path::empty_at(a.left().domain(g)));
  while (!work.empty()) {
    Path p = std::move(work.front());
    work.pop_front();
    GisElement c = GisElement::pair(g, concat(g, a.left(), p),
                                    concat(g, a.right(), p));
    bool below = false;
    bool strictly_above = false;
    for (const GisElement& b : targets) {
      if (leq(g, c, b)) {
        below = true;
        break;
      }
      if (leq(g, b, c)) strictly_above = true;
    }
    if (below) continue;
    if (!strictly_above) return {false, p};
    if (p.length() >= depth_cap)
      throw std::logic_error("arrow search exceeded its depth cap");
    for (const EdgeId& e : g.in_edges(p.domain(g)))
      work.push_back(concat(g, p, Path::of_edge(g, e)));
  }
  return {true, Path::empty_at(a.left().domain(g))};
}

struct SetArrowResult {
  bool holds = true;
  // When the relation fails: the source element and extension path
  // witnessing the failure.
  GisElement fail_source = GisElement::zero();
  Path fail_path;
  explicit operator bool() const { return holds; }
};

// A -> B: every member of A arrows to B.
inline SetArrowResult arrow_sets(const DirectedGraph& g, const OrthoSet& a,
                                 const OrthoSet& b,
                                 std::size_t depth_cap = kDefaultArrowDepthCap) {
  for (const GisElement& s : a) {
    ArrowWitness w = arrow(g, s, b.elements(), depth_cap);
    if (!w.holds) return {false, s, w.fail_path};
  }
  return {};
}

inline bool bi_arrow(const DirectedGraph& g, const OrthoSet& a,
                     const OrthoSet& b,
                     std::size_t depth_cap = kDefaultArrowDepthCap) {
  return arrow_sets(g, a, b, depth_cap).holds &&
         arrow_sets(g, b, a, depth_cap).holds;
}

// A finite subset of a-down covers a when a -> A.
inline bool is_cover(const DirectedGraph& g, const GisElement& a,
                     std::span<const GisElement> members,
                     std::size_t depth_cap = kDefaultArrowDepthCap) {
  for (const GisElement& s : members)
    if (!leq(g, s, a))
      throw std::invalid_argument("cover member " + to_string(s) +
                                  " does not lie below " + to_string(a));
  return arrow(g, a, members, depth_cap).holds;
}

// A preceq B iff A <= B and B -> A.
inline bool preceq(const DirectedGraph& g, const OrthoSet& a,
                   const OrthoSet& b,
                   std::size_t depth_cap = kDefaultArrowDepthCap) {
  return ortho_leq(g, a, b) && arrow_sets(g, b, a, depth_cap).holds;
}

// A == B in the completion quotient iff A <-> B.
inline bool equiv(const DirectedGraph& g, const OrthoSet& a, const OrthoSet& b,
                  std::size_t depth_cap = kDefaultArrowDepthCap) {
  return bi_arrow(g, a, b, depth_cap);
}

namespace detail {

// A contractible family in A is {(xa)(ya)^-1 : a over all edges into d(x)}
// for a common stem (x, y); it collapses to x y^-1 without changing the
// equivalence class.
struct Contraction {
  Path x, y;
  std::vector<GisElement> family;
};

inline std::optional<Contraction> find_contraction(const DirectedGraph& g,
                                                   const OrthoSet& a) {
  std::optional<Contraction> best;
  std::vector<std::pair<Path, Path>> seen;  // stems already examined
  for (const GisElement& s : a) {
    if (s.left().is_empty() || s.right().is_empty()) continue;
    const auto& xe = s.left().edges();
    const auto& ye = s.right().edges();
    if (xe.back() != ye.back()) continue;
    const DirectedGraph::Edge& last = g.edge(xe.back());
    Path stem_x = xe.size() == 1 ? Path::empty_at(last.target)
                                 : Path::of_edges(g, {xe.begin(), xe.end() - 1});
    Path stem_y = ye.size() == 1 ? Path::empty_at(last.target)
                                 : Path::of_edges(g, {ye.begin(), ye.end() - 1});
    if (std::find(seen.begin(), seen.end(),
                  std::make_pair(stem_x, stem_y)) != seen.end())
      continue;
    seen.emplace_back(stem_x, stem_y);
    const std::vector<EdgeId>& fam_edges = g.in_edges(stem_x.domain(g));
    if (fam_edges.empty()) continue;
    std::vector<GisElement> family;
    bool complete = true;
    for (const EdgeId& e : fam_edges) {
      GisElement member =
          GisElement::pair(g, concat(g, stem_x, Path::of_edge(g, e)),
                           concat(g, stem_y, Path::of_edge(g, e)));
      if (!a.contains(member)) {
        complete = false;
        break;
      }
      family.push_back(member);
    }
    if (!complete) continue;
    // Prefer the longest stem; break ties lexicographically so the reduced
    // form is deterministic.
    if (!best || stem_x.length() > best->x.length() ||
        (stem_x.length() == best->x.length() &&
         (compare(stem_x, best->x) < 0 ||
          (compare(stem_x, best->x) == 0 && compare(stem_y, best->y) < 0)))) {
      best = Contraction{stem_x, stem_y, std::move(family)};
    }
  }
  return best;
}

}  // namespace detail

// Contracts complete one-edge expansion families until none remain.  The
// result is equivalent to the input; on graphs where every in-degree is at
// least 2 the fixed point is a class canonical form.
inline OrthoSet reduce(const DirectedGraph& g, const OrthoSet& a) {
  OrthoSet cur = a;
  while (auto c = detail::find_contraction(g, cur)) {
    std::vector<GisElement> next;
    for (const GisElement& s : cur)
      if (std::find(c->family.begin(), c->family.end(), s) == c->family.end())
        next.push_back(s);
    next.push_back(GisElement::pair(g, c->x, c->y));
    cur = OrthoSet::make(g, std::move(next));
  }
  return cur;
}

}  // namespace grism
