#pragma once

// Compact-open bisections of the path-space groupoid as finite disjoint
// unions of basis sets Z(x, y).  A basis pair stores (x, y) with
// d(x) = d(y); the shift datum of Z(x, y) is |y| - |x| and needs no
// separate field.  Two basis sets intersect exactly when the corresponding
// semigroup elements are comparable, so disjointness is a comparability
// check.
//
// The product formula follows the composition of the underlying partial
// maps: Z(x,y) Z(u,v) is Z(x,vz) when y = uz and Z(xz,v) when u = yz.  (A
// commonly printed variant of the second case, Z(yz,v), is inconsistent
// with the composition semantics; the cross-model tests pin the version
// implemented here against the cylinder-map model.)

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grism/ck.hpp"
#include "grism/refine.hpp"

namespace grism {

using BasisPair = std::pair<Path, Path>;  // (x, y) for Z(x, y)

inline long long shift(const BasisPair& p) {
  return static_cast<long long>(p.second.length()) -
         static_cast<long long>(p.first.length());
}

inline GisElement basis_element(const DirectedGraph& g, const BasisPair& p) {
  return GisElement::pair(g, p.first, p.second);
}

// Z(x,y) Z(u,v); empty when y and u are not prefix-comparable.
inline std::optional<BasisPair> z_product(const DirectedGraph& g,
                                          const BasisPair& p1,
                                          const BasisPair& p2) {
  const auto& [x, y] = p1;
  const auto& [u, v] = p2;
  PrefixResult pr = prefix_comparable(g, u, y);
  switch (pr.rel) {
    case PrefixRel::Equal:
      return BasisPair{x, v};
    case PrefixRel::XExtendsY:  // u = y z
      return BasisPair{concat(g, x, pr.witness), v};
    case PrefixRel::YExtendsX:  // y = u z
      return BasisPair{x, concat(g, v, pr.witness)};
    case PrefixRel::Incomparable:
      return std::nullopt;
  }
  return std::nullopt;
}

// Z(x,y) and Z(u,v) intersect in the smaller set when the elements are
// comparable and are disjoint otherwise.
inline std::optional<BasisPair> z_intersect(const DirectedGraph& g,
                                            const BasisPair& p1,
                                            const BasisPair& p2) {
  GisElement a = basis_element(g, p1);
  GisElement b = basis_element(g, p2);
  if (leq(g, a, b)) return p1;
  if (leq(g, b, a)) return p2;
  return std::nullopt;
}

class Bisection {
 public:
  Bisection() = default;  // the empty bisection

  static Bisection make(const DirectedGraph& g, std::vector<BasisPair> pairs) {
    for (const auto& [x, y] : pairs)
      if (x.domain(g) != y.domain(g))
        throw std::invalid_argument("basis pair paths are not coterminal");
    std::sort(pairs.begin(), pairs.end(), detail::pair_less);
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        if (z_intersect(g, pairs[i], pairs[j]))
          throw std::invalid_argument("basis sets overlap: comparable pairs");
    Bisection b;
    b.pairs_ = std::move(pairs);
    return b;
  }

  bool is_empty() const { return pairs_.empty(); }
  const std::vector<BasisPair>& pairs() const { return pairs_; }

 private:
  std::vector<BasisPair> pairs_;  // sorted, pairwise incomparable
};

inline Bisection theta(const DirectedGraph& g, const GisElement& s) {
  if (s.is_zero()) return Bisection();
  return Bisection::make(g, {{s.left(), s.right()}});
}

// Extension of theta through the quotient: the union of the basis sets of
// the class representative.  Equivalent representatives give bisections
// that normalize identically.
inline Bisection theta_bar(const DirectedGraph& g, const CkElement& c) {
  require_ck_graph(g);
  std::vector<BasisPair> pairs;
  for (const GisElement& s : c.rep()) pairs.emplace_back(s.left(), s.right());
  return Bisection::make(g, std::move(pairs));
}

inline Bisection bisection_multiply(const DirectedGraph& g, const Bisection& a,
                                    const Bisection& b) {
  std::vector<BasisPair> out;
  for (const BasisPair& p1 : a.pairs())
    for (const BasisPair& p2 : b.pairs())
      if (auto p = z_product(g, p1, p2)) out.push_back(*p);
  return Bisection::make(g, std::move(out));
}

inline Bisection bisection_inverse(const DirectedGraph& g, const Bisection& a) {
  std::vector<BasisPair> out;
  for (const auto& [x, y] : a.pairs()) out.emplace_back(y, x);
  return Bisection::make(g, std::move(out));
}

// Union after screening: nested basis sets are absorbed into the larger
// one; any remaining overlap of source or range cylinders means the union
// is not a bisection and is reported with the offending pair.
inline Bisection bisection_union(const DirectedGraph& g, const Bisection& a,
                                 const Bisection& b) {
  std::vector<BasisPair> all(a.pairs());
  all.insert(all.end(), b.pairs().begin(), b.pairs().end());
  std::sort(all.begin(), all.end(), detail::pair_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<BasisPair> kept;
  for (const BasisPair& p : all) {
    bool absorbed = false;
    for (const BasisPair& q : all)
      if (p != q && leq(g, basis_element(g, p), basis_element(g, q))) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(p);
  }
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      bool img = prefix_comparable(g, kept[i].first, kept[j].first).rel !=
                 PrefixRel::Incomparable;
      bool dom = prefix_comparable(g, kept[i].second, kept[j].second).rel !=
                 PrefixRel::Incomparable;
      if (img || dom) {
        std::ostringstream os;
        os << "union is not a bisection: Z(" << kept[i].first << ","
           << kept[i].second << ") overlaps Z(" << kept[j].first << ","
           << kept[j].second << "); refine first";
        throw std::invalid_argument(os.str());
      }
    }
  return Bisection::make(g, std::move(kept));
}

// Uniform-depth normal form; two bisections are equal as groupoid subsets
// exactly when their normal forms coincide.
inline std::vector<BasisPair> normalized_pairs(const DirectedGraph& g,
                                               const Bisection& a,
                                               std::size_t depth) {
  return detail::refine_pairs(g, a.pairs(), depth);
}

inline bool bisections_equal(const DirectedGraph& g, const Bisection& a,
                             const Bisection& b) {
  require_ck_graph(g);
  std::size_t depth = std::max(detail::max_domain_length(a.pairs()),
                               detail::max_domain_length(b.pairs()));
  return normalized_pairs(g, a, depth) == normalized_pairs(g, b, depth);
}

inline std::ostream& operator<<(std::ostream& os, const Bisection& a) {
  if (a.is_empty()) return os << "{}";
  bool sep = false;
  for (const auto& [x, y] : a.pairs()) {
    if (sep) os << " u ";
    os << "Z(" << x << "," << y << ")";
    sep = true;
  }
  return os;
}

}  // namespace grism
