#pragma once

// The Cuntz-Krieger completion CK_G = D(P_G)/==, with the embedding delta,
// products, orthogonal joins, and the boolean algebra of idempotent classes.
//
// Classes are represented by reduced orthogonal sets.  Equality always
// routes through the arrow-based decision; the reduced form only provides a
// fast path and deterministic serialization.  delta, products, and equality
// are meaningful over any graph; joins and the idempotent boolean
// operations refine through the infinite-path space and therefore insist on
// every in-degree being finite and at least 2.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grism/arrow.hpp"
#include "grism/refine.hpp"

namespace grism {

// The standing assumption for the concrete models: every vertex has
// in-degree at least 2 (finiteness is automatic for these graphs).
inline bool ck_qualifies(const DirectedGraph& g) {
  for (const VertexId& v : g.vertices())
    if (g.in_degree(v) < 2) return false;
  return true;
}

inline void require_ck_graph(const DirectedGraph& g) {
  for (const VertexId& v : g.vertices())
    if (g.in_degree(v) < 2)
      throw std::invalid_argument(
          "graph does not meet the completion precondition: vertex " + v +
          " has in-degree " + std::to_string(g.in_degree(v)) +
          " (every in-degree must be at least 2)");
}

class CkElement {
 public:
  CkElement() = default;  // the zero class

  static CkElement from(const DirectedGraph& g, const OrthoSet& rep) {
    CkElement c;
    c.rep_ = reduce(g, rep);
    return c;
  }

  const OrthoSet& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  bool is_idempotent() const { return all_idempotent(rep_); }

 private:
  OrthoSet rep_;
};

inline CkElement delta(const DirectedGraph& g, const GisElement& s) {
  return CkElement::from(g, iota(g, s));
}

inline bool ck_equal(const DirectedGraph& g, const CkElement& a,
                     const CkElement& b) {
  if (a.rep() == b.rep()) return true;
  return equiv(g, a.rep(), b.rep());
}

inline CkElement ck_multiply(const DirectedGraph& g, const CkElement& a,
                             const CkElement& b) {
  return CkElement::from(g, product(g, a.rep(), b.rep()));
}

inline CkElement ck_inverse(const DirectedGraph& g, const CkElement& a) {
  return CkElement::from(g, inverse(g, a.rep()));
}

namespace detail {

inline std::vector<PathPair> rep_pairs(const OrthoSet& a) {
  std::vector<PathPair> out;
  for (const GisElement& s : a) out.emplace_back(s.left(), s.right());
  return out;
}

inline OrthoSet pairs_to_set(const DirectedGraph& g,
                             std::vector<PathPair> pairs) {
  std::vector<GisElement> elems;
  for (auto& [x, y] : pairs) elems.push_back(GisElement::pair(g, x, y));
  return OrthoSet::make(g, std::move(elems));
}

}  // namespace detail

// Join of two classes.  Both representatives are refined to a common domain
// depth; identical refined pieces merge, and any remaining overlap means no
// orthogonal representatives exist, which is reported with the offending
// pair.
inline CkElement ck_join(const DirectedGraph& g, const CkElement& a,
                         const CkElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto pa = detail::rep_pairs(a.rep());
  auto pb = detail::rep_pairs(b.rep());
  std::size_t depth =
      std::max(detail::max_domain_length(pa), detail::max_domain_length(pb));
  auto ra = detail::refine_pairs(g, pa, depth);
  auto rb = detail::refine_pairs(g, pb, depth);
  std::vector<detail::PathPair> merged = ra;
  for (const auto& pr : rb)
    if (std::find(merged.begin(), merged.end(), pr) == merged.end())
      merged.push_back(pr);
  std::vector<GisElement> elems;
  for (const auto& [x, y] : merged) elems.push_back(GisElement::pair(g, x, y));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!orthogonal(g, elems[i], elems[j]))
        throw std::invalid_argument(
            "join has no orthogonal representatives: " + to_string(elems[i]) +
            " overlaps " + to_string(elems[j]));
  return CkElement::from(g, OrthoSet::make(g, std::move(elems)));
}

namespace detail {

// Expands the support {x : x x^-1 in rep} of an idempotent class to the set
// of its length-`depth` extensions.
inline std::vector<Path> idempotent_support_at_depth(const DirectedGraph& g,
                                                     const CkElement& e,
                                                     std::size_t depth) {
  if (!e.is_idempotent())
    throw std::invalid_argument("idempotent class required");
  std::vector<Path> out;
  for (const GisElement& s : e.rep()) {
    const Path& x = s.left();
    if (x.length() > depth)
      throw std::invalid_argument("support expansion depth too small");
    for (const Path& p : extensions(g, x.domain(g), depth - x.length()))
      out.push_back(concat(g, x, p));
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

inline CkElement class_of_paths(const DirectedGraph& g,
                                const std::vector<Path>& paths) {
  std::vector<GisElement> elems;
  for (const Path& p : paths) elems.push_back(GisElement::idempotent(g, p));
  return CkElement::from(g, OrthoSet::make(g, std::move(elems)));
}

}  // namespace detail

// Meet and relative complement in the boolean algebra of idempotent
// classes: expand both supports to a common depth, then intersect or
// subtract the path sets.
inline CkElement idempotent_meet(const DirectedGraph& g, const CkElement& e,
                                 const CkElement& f) {
  std::size_t depth = std::max(detail::max_domain_length(detail::rep_pairs(e.rep())),
                               detail::max_domain_length(detail::rep_pairs(f.rep())));
  auto se = detail::idempotent_support_at_depth(g, e, depth);
  auto sf = detail::idempotent_support_at_depth(g, f, depth);
  std::vector<Path> out;
  std::set_intersection(se.begin(), se.end(), sf.begin(), sf.end(),
                        std::back_inserter(out), path_less);
  return detail::class_of_paths(g, out);
}

inline CkElement idempotent_difference(const DirectedGraph& g,
                                       const CkElement& e, const CkElement& f) {
  std::size_t depth = std::max(detail::max_domain_length(detail::rep_pairs(e.rep())),
                               detail::max_domain_length(detail::rep_pairs(f.rep())));
  auto se = detail::idempotent_support_at_depth(g, e, depth);
  auto sf = detail::idempotent_support_at_depth(g, f, depth);
  std::vector<Path> out;
  std::set_difference(se.begin(), se.end(), sf.begin(), sf.end(),
                      std::back_inserter(out), path_less);
  return detail::class_of_paths(g, out);
}

inline std::ostream& operator<<(std::ostream& os, const CkElement& c) {
  return os << "ck" << c.rep();
}

inline std::string to_string(const CkElement& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace grism
