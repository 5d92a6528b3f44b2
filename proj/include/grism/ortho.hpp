#pragma once

// The orthogonal completion D(P_G): finite pairwise-orthogonal sets of
// nonzero elements under setwise product.  The zero of the completion is
// the empty set; the implicit 0 member of every set is never stored.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grism/element.hpp"

namespace grism {

class OrthoSet {
 public:
  OrthoSet() = default;  // the zero of D(P_G)

  // Validates pairwise orthogonality eagerly; zero members are dropped
  // (they carry no information), duplicates are rejected as their own
  // orthogonality violation.
  static OrthoSet make(const DirectedGraph& g, std::vector<GisElement> elems) {
    std::vector<GisElement> kept;
    for (auto& s : elems)
      if (!s.is_zero()) kept.push_back(std::move(s));
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = i + 1; j < kept.size(); ++j)
        if (!orthogonal(g, kept[i], kept[j]))
          throw std::invalid_argument("not orthogonal: " + to_string(kept[i]) +
                                      " and " + to_string(kept[j]));
    OrthoSet a;
    a.elems_ = std::move(kept);
    return a;
  }

  bool is_zero() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<GisElement>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const GisElement& s) const {
    return std::binary_search(elems_.begin(), elems_.end(), s);
  }

  friend bool operator==(const OrthoSet& a, const OrthoSet& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const OrthoSet& a, const OrthoSet& b) {
    return !(a == b);
  }
  friend bool operator<(const OrthoSet& a, const OrthoSet& b) {
    return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(),
                                        b.elems_.begin(), b.elems_.end());
  }

 private:
  std::vector<GisElement> elems_;  // sorted, nonzero, pairwise orthogonal
};

// { a b : a in A, b in B, a b != 0 }.
inline OrthoSet product(const DirectedGraph& g, const OrthoSet& a,
                        const OrthoSet& b) {
  std::vector<GisElement> out;
  for (const GisElement& s : a)
    for (const GisElement& t : b) {
      GisElement st = multiply(g, s, t);
      if (!st.is_zero()) out.push_back(st);
    }
  return OrthoSet::make(g, std::move(out));
}

inline OrthoSet inverse(const DirectedGraph& g, const OrthoSet& a) {
  std::vector<GisElement> out;
  for (const GisElement& s : a) out.push_back(inverse(g, s));
  return OrthoSet::make(g, std::move(out));
}

// A <= B iff every member of A lies below some member of B.
inline bool ortho_leq(const DirectedGraph& g, const OrthoSet& a,
                      const OrthoSet& b) {
  for (const GisElement& s : a) {
    bool found = false;
    for (const GisElement& t : b)
      if (leq(g, s, t)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// The orthogonal join A v B = A u B; the union must itself be orthogonal.
inline OrthoSet ortho_join(const DirectedGraph& g, const OrthoSet& a,
                           const OrthoSet& b) {
  for (const GisElement& s : a)
    for (const GisElement& t : b)
      if (!orthogonal(g, s, t))
        throw std::invalid_argument("join does not exist: " + to_string(s) +
                                    " and " + to_string(t) +
                                    " are not orthogonal");
  std::vector<GisElement> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return OrthoSet::make(g, std::move(out));
}

// s |-> {0, s}; zero maps to the empty set.
inline OrthoSet iota(const DirectedGraph& g, const GisElement& s) {
  if (s.is_zero()) return OrthoSet();
  return OrthoSet::make(g, {s});
}

inline bool all_idempotent(const OrthoSet& a) {
  for (const GisElement& s : a)
    if (!s.is_idempotent()) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const OrthoSet& a) {
  os << "{";
  bool first = true;
  for (const GisElement& s : a) {
    if (!first) os << "; ";
    os << s;
    first = false;
  }
  return os << "}";
}

inline std::string to_string(const OrthoSet& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace grism
