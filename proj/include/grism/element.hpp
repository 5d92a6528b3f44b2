#pragma once

// Elements of the graph inverse semigroup P_G: zero, or a pair of coterminal
// finite paths x, y standing for x y^-1.  All operations are total pure
// functions; zero is the absorbing failure value of the multiplication.

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grism/graph.hpp"

namespace grism {

class GisElement {
 public:
  static GisElement zero() { return GisElement(); }

  // x y^-1; requires d(x) = d(y).
  static GisElement pair(const DirectedGraph& g, Path x, Path y) {
    if (x.domain(g) != y.domain(g))
      throw std::invalid_argument("paths are not coterminal: d(x) = " +
                                  x.domain(g) + ", d(y) = " + y.domain(g));
    GisElement s;
    s.zero_ = false;
    s.x_ = std::move(x);
    s.y_ = std::move(y);
    return s;
  }

  static GisElement idempotent(const DirectedGraph& g, const Path& x) {
    return pair(g, x, x);
  }

  static GisElement identity_at(const VertexId& v) {
    GisElement s;
    s.zero_ = false;
    s.x_ = Path::empty_at(v);
    s.y_ = Path::empty_at(v);
    return s;
  }

  bool is_zero() const { return zero_; }

  // Left path x of x y^-1.
  const Path& left() const {
    require_nonzero();
    return x_;
  }
  // Right path y of x y^-1.
  const Path& right() const {
    require_nonzero();
    return y_;
  }

  bool is_idempotent() const { return zero_ || x_ == y_; }

  void require_nonzero() const {
    if (zero_) throw std::invalid_argument("zero element not allowed here");
  }

  friend bool operator==(const GisElement& a, const GisElement& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const GisElement& a, const GisElement& b) {
    return !(a == b);
  }
  friend bool operator<(const GisElement& a, const GisElement& b) {
    if (a.zero_ || b.zero_) return a.zero_ && !b.zero_;
    int c = compare(a.x_, b.x_);
    if (c != 0) return c < 0;
    return compare(a.y_, b.y_) < 0;
  }

 private:
  GisElement() : zero_(true) {}
  bool zero_;
  Path x_, y_;
};

// x y^-1 . u v^-1 = x z v^-1   if u = y z,
//                 = x (v z)^-1 if y = u z,
//                 = 0          otherwise.
inline GisElement multiply(const DirectedGraph& g, const GisElement& s,
                           const GisElement& t) {
  if (s.is_zero() || t.is_zero()) return GisElement::zero();
  const Path& y = s.right();
  const Path& u = t.left();
  PrefixResult pr = prefix_comparable(g, u, y);
  switch (pr.rel) {
    case PrefixRel::Equal:
      return GisElement::pair(g, s.left(), t.right());
    case PrefixRel::XExtendsY:  // u = y z
      return GisElement::pair(g, concat(g, s.left(), pr.witness), t.right());
    case PrefixRel::YExtendsX:  // y = u z
      return GisElement::pair(g, s.left(), concat(g, t.right(), pr.witness));
    case PrefixRel::Incomparable:
      return GisElement::zero();
  }
  return GisElement::zero();
}

inline GisElement inverse(const DirectedGraph& g, const GisElement& s) {
  if (s.is_zero()) return s;
  return GisElement::pair(g, s.right(), s.left());
}

struct LeqResult {
  bool holds = false;
  std::optional<Path> witness;  // p with x = up, y = vp (absent for zero <= t)
  explicit operator bool() const { return holds; }
};

// Natural partial order: zero below everything; x y^-1 <= u v^-1 iff there
// is a path p with x = up and y = vp.
inline LeqResult natural_leq(const DirectedGraph& g, const GisElement& s,
                             const GisElement& t) {
  if (s.is_zero()) return {true, std::nullopt};
  if (t.is_zero()) return {false, std::nullopt};
  PrefixResult px = prefix_comparable(g, s.left(), t.left());
  if (px.rel != PrefixRel::Equal && px.rel != PrefixRel::XExtendsY)
    return {false, std::nullopt};
  PrefixResult py = prefix_comparable(g, s.right(), t.right());
  if (py.rel != PrefixRel::Equal && py.rel != PrefixRel::YExtendsX)
    return {false, std::nullopt};
  if (px.witness != py.witness) return {false, std::nullopt};
  return {true, px.witness};
}

inline bool leq(const DirectedGraph& g, const GisElement& s,
                const GisElement& t) {
  return natural_leq(g, s, t).holds;
}

// Meet via comparability; sound because the nonzero part of the order is
// unambiguous, so any two elements with a nonzero lower bound are comparable.
inline GisElement meet(const DirectedGraph& g, const GisElement& s,
                       const GisElement& t) {
  if (leq(g, s, t)) return s;
  if (leq(g, t, s)) return t;
  return GisElement::zero();
}

inline bool compatible(const DirectedGraph& g, const GisElement& s,
                       const GisElement& t) {
  return multiply(g, inverse(g, s), t).is_idempotent() &&
         multiply(g, s, inverse(g, t)).is_idempotent();
}

inline bool orthogonal(const DirectedGraph& g, const GisElement& s,
                       const GisElement& t) {
  return multiply(g, inverse(g, s), t).is_zero() &&
         multiply(g, s, inverse(g, t)).is_zero();
}

enum class Greens { L, R, D, JLeq };

// Green's relations specialised to free categories: the only isomorphisms
// are identities, so path equality and vertex equality replace the general
// isomorphism conditions.
inline bool greens(const DirectedGraph& g, const GisElement& s,
                   const GisElement& t, Greens rel) {
  s.require_nonzero();
  t.require_nonzero();
  switch (rel) {
    case Greens::L:
      return s.right() == t.right();
    case Greens::R:
      return s.left() == t.left();
    case Greens::D:
      return s.right().domain(g) == t.right().domain(g);
    case Greens::JLeq:
      return g.reaches(s.right().domain(g), t.right().domain(g));
  }
  return false;
}

// [x,x]^o = [r(x), r(x)]: the maximal idempotent above s s^-1.
inline GisElement maximal_idempotent_over(const DirectedGraph& g,
                                          const GisElement& s) {
  s.require_nonzero();
  return GisElement::identity_at(s.left().range(g));
}

// The idempotents covered by x x^-1: one-edge extensions (xa)(xa)^-1 over
// the edges a into d(x).
inline std::vector<GisElement> covered_idempotents(const DirectedGraph& g,
                                                   const GisElement& e) {
  e.require_nonzero();
  if (!e.is_idempotent())
    throw std::invalid_argument("covered_idempotents needs an idempotent");
  std::vector<GisElement> out;
  const Path& x = e.left();
  for (const EdgeId& a : g.in_edges(x.domain(g))) {
    Path xa = concat(g, x, Path::of_edge(g, a));
    out.push_back(GisElement::idempotent(g, xa));
  }
  return out;
}

// Weight of the idempotent x x^-1 is |x|.
inline std::size_t weight(const GisElement& e) {
  e.require_nonzero();
  if (!e.is_idempotent())
    throw std::invalid_argument("weight needs an idempotent");
  return e.left().length();
}

inline std::ostream& operator<<(std::ostream& os, const GisElement& s) {
  if (s.is_zero()) return os << "0";
  return os << s.left() << "*" << s.right() << "^-1";
}

inline std::string to_string(const GisElement& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace grism
