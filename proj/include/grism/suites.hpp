#pragma once

// Exhaustive and sampled law checking at desk scale.  Each suite walks a
// bounded fragment of the algebra and reports per-law counts; the CLI and
// the acceptance tests share these implementations.  Where a suite checks
// an equivalence decision it does so against an independently computed
// route (refinement-witness search, cylinder maps, bisections), never
// against the decision itself.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grism/arrow.hpp"
#include "grism/bratteli.hpp"
#include "grism/ck.hpp"
#include "grism/groupoid.hpp"
#include "grism/omega.hpp"

namespace grism {

struct CheckResult {
  std::string law;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> diagnostics;
  bool pass() const {
    for (const auto& c : checks)
      if (c.failures != 0) return false;
    return true;
  }
};

struct SuiteOptions {
  std::size_t depth = 2;
  std::size_t arrow_cap = kDefaultArrowDepthCap;
  std::optional<std::string> root;            // bratteli suite
  std::optional<std::string> branching_text;  // branching suite
};

inline void tally(CheckResult& c, bool ok) {
  ++c.checked;
  if (!ok) ++c.failures;
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

// All nonzero elements whose paths both have length <= len.
inline std::vector<GisElement> enumerate_elements(const DirectedGraph& g,
                                                  std::size_t len) {
  std::vector<Path> paths = enumerate_paths(g, len);
  std::vector<GisElement> out;
  for (const Path& x : paths)
    for (const Path& y : paths)
      if (x.domain(g) == y.domain(g)) out.push_back(GisElement::pair(g, x, y));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GisElement> enumerate_idempotents(const DirectedGraph& g,
                                                     std::size_t len) {
  std::vector<GisElement> out;
  for (const Path& x : enumerate_paths(g, len))
    out.push_back(GisElement::idempotent(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

// All orthogonal sets with at most max_size members drawn from `elems`
// (which must be sorted); includes the empty set.
inline std::vector<OrthoSet> enumerate_orthosets(
    const DirectedGraph& g, const std::vector<GisElement>& elems,
    std::size_t max_size) {
  std::vector<OrthoSet> out{OrthoSet()};
  std::vector<GisElement> cur;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() >= max_size) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      bool ok = true;
      for (const GisElement& s : cur)
        if (!orthogonal(g, s, elems[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(elems[i]);
      out.push_back(OrthoSet::make(g, cur));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Independent routes used as oracles.

// Lower bounds of s among `universe`, computed without the meet shortcut.
inline std::vector<GisElement> lower_bounds(
    const DirectedGraph& g, const GisElement& s, const GisElement& t,
    const std::vector<GisElement>& universe) {
  std::vector<GisElement> out;
  for (const GisElement& u : universe)
    if (leq(g, u, s) && leq(g, u, t)) out.push_back(u);
  return out;
}

// Existence of a common refinement: a nonzero orthogonal set C with
// C <= A, A -> C, C <= B and B -> C, drawn from `universe` with at most
// max_size members.
inline bool exists_common_refinement(const DirectedGraph& g, const OrthoSet& a,
                                     const OrthoSet& b,
                                     const std::vector<GisElement>& universe,
                                     std::size_t max_size,
                                     std::size_t arrow_cap) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() || b.is_zero()) return false;
  // Candidates must lie below a member of each side.
  std::vector<GisElement> cands;
  for (const GisElement& u : universe) {
    bool below_a = false, below_b = false;
    for (const GisElement& s : a)
      if (leq(g, u, s)) {
        below_a = true;
        break;
      }
    if (!below_a) continue;
    for (const GisElement& t : b)
      if (leq(g, u, t)) {
        below_b = true;
        break;
      }
    if (below_b) cands.push_back(u);
  }
  std::vector<GisElement> cur;
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (!cur.empty()) {
      OrthoSet c = OrthoSet::make(g, cur);
      if (preceq(g, c, a, arrow_cap) && preceq(g, c, b, arrow_cap)) return true;
    }
    if (cur.size() >= max_size) return false;
    for (std::size_t i = start; i < cands.size(); ++i) {
      bool ok = true;
      for (const GisElement& s : cur)
        if (!orthogonal(g, s, cands[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(cands[i]);
      if (self(self, i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

// One full covering expansion of a randomly chosen member whose paths stay
// within max_len; returns the input unchanged when nothing can expand.
inline OrthoSet expand_once(const DirectedGraph& g, const OrthoSet& a,
                            std::mt19937& rng, std::size_t max_len) {
  std::vector<GisElement> expandable;
  for (const GisElement& s : a) {
    const VertexId v = s.left().domain(g);
    if (g.in_degree(v) == 0) continue;
    if (std::max(s.left().length(), s.right().length()) + 1 > max_len) continue;
    expandable.push_back(s);
  }
  if (expandable.empty()) return a;
  const GisElement& pick =
      expandable[std::uniform_int_distribution<std::size_t>(
          0, expandable.size() - 1)(rng)];
  std::vector<GisElement> next;
  for (const GisElement& s : a)
    if (s != pick) next.push_back(s);
  for (const EdgeId& e : g.in_edges(pick.left().domain(g)))
    next.push_back(
        GisElement::pair(g, concat(g, pick.left(), Path::of_edge(g, e)),
                         concat(g, pick.right(), Path::of_edge(g, e))));
  return OrthoSet::make(g, std::move(next));
}

// ---------------------------------------------------------------------------
// Suites.

inline SuiteReport suite_gis_laws(const DirectedGraph& g,
                                  const SuiteOptions& opt) {
  SuiteReport rep{"gis-laws"};
  auto elems = enumerate_elements(g, opt.depth);
  std::vector<GisElement> all = elems;
  all.push_back(GisElement::zero());

  CheckResult assoc{"associativity"};
  for (const auto& s : all)
    for (const auto& t : all)
      for (const auto& u : all)
        tally(assoc, multiply(g, multiply(g, s, t), u) ==
                         multiply(g, s, multiply(g, t, u)));
  rep.checks.push_back(assoc);

  CheckResult inv{"s = s s^-1 s and inverse involution"};
  for (const auto& s : all) {
    bool ok = multiply(g, multiply(g, s, inverse(g, s)), s) == s &&
              inverse(g, inverse(g, s)) == s;
    tally(inv, ok);
  }
  rep.checks.push_back(inv);

  CheckResult comm{"idempotents commute"};
  for (const auto& s : all)
    for (const auto& t : all) {
      if (!s.is_idempotent() || !t.is_idempotent()) continue;
      tally(comm, multiply(g, s, t) == multiply(g, t, s));
    }
  rep.checks.push_back(comm);

  CheckResult comb{"H-related elements are equal"};
  for (const auto& s : elems)
    for (const auto& t : elems) {
      if (greens(g, s, t, Greens::L) && greens(g, s, t, Greens::R))
        tally(comb, s == t);
    }
  rep.checks.push_back(comb);

  CheckResult dedekind{"idempotents above x x^-1 number |x| + 1"};
  auto idems = enumerate_idempotents(g, opt.depth);
  for (const auto& e : idems) {
    std::size_t above = 0;
    for (const auto& f : idems)
      if (leq(g, e, f)) ++above;
    tally(dedekind, above == e.left().length() + 1);
  }
  rep.checks.push_back(dedekind);

  CheckResult meets{"meet is the maximum lower bound"};
  auto universe = enumerate_elements(g, opt.depth + 1);
  for (const auto& s : elems)
    for (const auto& t : elems) {
      GisElement m = meet(g, s, t);
      bool ok = (m.is_zero() || (leq(g, m, s) && leq(g, m, t)));
      for (const auto& u : lower_bounds(g, s, t, universe))
        if (!leq(g, u, m)) ok = false;
      tally(meets, ok);
    }
  rep.checks.push_back(meets);

  CheckResult covers{"covered idempotents are orthogonal covers"};
  auto deep = enumerate_idempotents(g, opt.depth + 2);
  for (const auto& e : idems) {
    auto hat = covered_idempotents(g, e);
    bool ok = true;
    for (std::size_t i = 0; i < hat.size(); ++i) {
      if (!leq(g, hat[i], e) || hat[i] == e) ok = false;
      for (std::size_t j = i + 1; j < hat.size(); ++j)
        if (!orthogonal(g, hat[i], hat[j])) ok = false;
      for (const auto& mid : deep)
        if (leq(g, hat[i], mid) && leq(g, mid, e) && mid != hat[i] && mid != e)
          ok = false;
    }
    tally(covers, ok);
  }
  rep.checks.push_back(covers);

  return rep;
}

inline SuiteReport suite_unambiguity(const DirectedGraph& g,
                                     const SuiteOptions& opt) {
  SuiteReport rep{"lemma-1-7"};
  auto elems = enumerate_elements(g, opt.depth);
  auto idems = enumerate_idempotents(g, opt.depth);
  auto universe = enumerate_elements(g, opt.depth + 1);

  CheckResult eu{"nonzero idempotent below s forces s idempotent"};
  for (const auto& e : idems)
    for (const auto& s : elems)
      if (leq(g, e, s)) tally(eu, s.is_idempotent());
  rep.checks.push_back(eu);

  CheckResult iu{"idempotents with nonzero product are comparable"};
  for (const auto& e : idems)
    for (const auto& f : idems)
      if (!multiply(g, e, f).is_zero())
        tally(iu, leq(g, e, f) || leq(g, f, e));
  rep.checks.push_back(iu);

  CheckResult ou{"elements with a nonzero lower bound are comparable"};
  for (const auto& s : elems)
    for (const auto& t : elems) {
      bool has_lb = !lower_bounds(g, s, t, universe).empty();
      if (has_lb) tally(ou, leq(g, s, t) || leq(g, t, s));
    }
  rep.checks.push_back(ou);

  return rep;
}

inline SuiteReport suite_degree_dichotomies(const DirectedGraph& g,
                                            const SuiteOptions& opt) {
  SuiteReport rep{"lemma-2-9"};
  bool some_source = false;
  bool degree_ok_for_disjunctive = true;
  for (const VertexId& v : g.vertices()) {
    std::size_t d = g.in_degree(v);
    if (d == 0) some_source = true;
    if (d == 1) degree_ok_for_disjunctive = false;
  }

  auto idems = enumerate_idempotents(g, opt.depth);
  auto deep = enumerate_idempotents(g, opt.depth + 1);

  bool found_minimal = false;
  for (const auto& e : idems) {
    bool has_below = false;
    for (const auto& f : deep)
      if (leq(g, f, e) && f != e) {
        has_below = true;
        break;
      }
    if (!has_below) found_minimal = true;
  }
  CheckResult minimal{"0-minimal idempotents exist iff some in-degree is 0"};
  tally(minimal, found_minimal == some_source);
  rep.checks.push_back(minimal);
  rep.diagnostics.push_back(std::string("0-minimal idempotents ") +
                            (found_minimal ? "exist" : "do not exist"));

  bool disjunctive = true;
  for (const auto& f : idems)
    for (const auto& e : deep) {
      if (!leq(g, e, f) || e == f) continue;
      bool found = false;
      for (const auto& e2 : deep)
        if (leq(g, e2, f) && e2 != f && multiply(g, e, e2).is_zero()) {
          found = true;
          break;
        }
      if (!found) disjunctive = false;
    }
  CheckResult dis{"0-disjunctive iff every in-degree is 0 or at least 2"};
  tally(dis, disjunctive == degree_ok_for_disjunctive);
  rep.checks.push_back(dis);
  rep.diagnostics.push_back(std::string("semilattice of idempotents is ") +
                            (disjunctive ? "0-disjunctive" : "not 0-disjunctive"));

  bool pseudofinite = true;
  for (const auto& e : idems)
    for (const auto& f : deep) {
      if (!leq(g, f, e) || f == e) continue;
      bool found = false;
      for (const auto& c : covered_idempotents(g, e))
        if (leq(g, f, c)) {
          found = true;
          break;
        }
      if (!found) pseudofinite = false;
    }
  CheckResult pf{"pseudofinite iff every in-degree is finite"};
  tally(pf, pseudofinite == true);
  rep.checks.push_back(pf);

  return rep;
}

inline SuiteReport suite_equivalence_oracle(const DirectedGraph& g,
                                            const SuiteOptions& opt) {
  SuiteReport rep{"lemma-3-8"};
  auto elems = enumerate_elements(g, opt.depth);
  auto big = enumerate_orthosets(g, elems, 2);
  std::vector<OrthoSet> small{OrthoSet()};
  for (const auto& s : elems) small.push_back(OrthoSet::make(g, {s}));
  auto universe = enumerate_elements(g, opt.depth + 1);

  CheckResult agree{"arrow equivalence matches refinement-witness search"};
  for (const auto& a : big)
    for (const auto& b : small) {
      bool via_arrow = equiv(g, a, b, opt.arrow_cap);
      bool via_search =
          exists_common_refinement(g, a, b, universe, 3, opt.arrow_cap);
      tally(agree, via_arrow == via_search);
    }
  rep.checks.push_back(agree);

  CheckResult refl{"arrow is reflexive and transitive"};
  for (const auto& s : elems) {
    tally(refl, arrow(g, s, std::span(&s, 1), opt.arrow_cap).holds);
  }
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        bool ab = arrow_sets(g, a, b, opt.arrow_cap).holds;
        bool bc = arrow_sets(g, b, c, opt.arrow_cap).holds;
        if (ab && bc)
          tally(refl, arrow_sets(g, a, c, opt.arrow_cap).holds);
      }
  rep.checks.push_back(refl);

  CheckResult cong{"equivalence is a congruence"};
  for (const auto& a : big) {
    for (const auto& b : big) {
      if (!equiv(g, a, b, opt.arrow_cap)) continue;
      for (const auto& c : small) {
        tally(cong, equiv(g, product(g, c, a), product(g, c, b), opt.arrow_cap));
        tally(cong, equiv(g, product(g, a, c), product(g, b, c), opt.arrow_cap));
      }
    }
  }
  rep.checks.push_back(cong);

  CheckResult pure{"equivalence is idempotent pure"};
  for (const auto& a : big)
    for (const auto& b : big) {
      if (!all_idempotent(a) || a.is_zero()) continue;
      if (equiv(g, a, b, opt.arrow_cap)) tally(pure, all_idempotent(b));
    }
  rep.checks.push_back(pure);

  CheckResult red{"reduction preserves the class"};
  for (const auto& a : big) tally(red, equiv(g, reduce(g, a), a, opt.arrow_cap));
  rep.checks.push_back(red);

  if (ck_qualifies(g)) {
    CheckResult canon{"reduced forms are canonical"};
    for (const auto& a : big)
      for (const auto& b : big)
        tally(canon,
              equiv(g, a, b, opt.arrow_cap) == (reduce(g, a) == reduce(g, b)));
    rep.checks.push_back(canon);

    CheckResult sep{"separative: bi-arrow on single elements is equality"};
    for (const auto& s : elems)
      for (const auto& t : elems)
        if (equiv(g, iota(g, s), iota(g, t), opt.arrow_cap))
          tally(sep, s == t);
    rep.checks.push_back(sep);
  } else {
    bool collapse = false;
    for (const auto& s : elems) {
      for (const auto& t : elems)
        if (s != t && equiv(g, iota(g, s), iota(g, t), opt.arrow_cap)) {
          collapse = true;
          break;
        }
      if (collapse) break;
    }
    CheckResult sep{"non-separative: some distinct elements are identified"};
    bool expected_collapse = false;
    for (const VertexId& v : g.vertices())
      if (g.in_degree(v) == 1) expected_collapse = true;
    tally(sep, collapse == expected_collapse);
    rep.checks.push_back(sep);
  }

  return rep;
}

inline SuiteReport suite_cylinder_agreement(const DirectedGraph& g,
                                            const SuiteOptions& opt) {
  SuiteReport rep{"thm-3-13"};
  if (!ck_qualifies(g)) {
    rep.checks.push_back(
        {"precondition: every in-degree at least 2 and finite", 1, 1,
         "graph does not qualify"});
    return rep;
  }
  auto elems = enumerate_elements(g, opt.depth);
  auto sets = enumerate_orthosets(g, elems, 2);

  CheckResult eq{"arrow equivalence matches cylinder-map equality"};
  CheckResult hom{"setwise product matches map composition"};
  for (const auto& a : sets) {
    CylinderMap ma = from_ortho_set(g, a);
    for (const auto& b : sets) {
      CylinderMap mb = from_ortho_set(g, b);
      tally(eq, equiv(g, a, b, opt.arrow_cap) == maps_equal(g, ma, mb));
      tally(hom, maps_equal(g, from_ortho_set(g, product(g, a, b)),
                            compose(g, ma, mb)));
    }
  }
  rep.checks.push_back(eq);
  rep.checks.push_back(hom);

  CheckResult ref{"refinement never changes the map"};
  for (const auto& a : sets) {
    CylinderMap m = from_ortho_set(g, a);
    for (std::size_t extra = 0; extra <= 2; ++extra)
      tally(ref, maps_equal(g, m, refine(g, m, m.max_domain_length() + extra)));
  }
  rep.checks.push_back(ref);

  CheckResult inj{"the cylinder representation is faithful on elements"};
  for (const auto& s : elems)
    for (const auto& t : elems)
      if (maps_equal(g, from_ortho_set(g, iota(g, s)),
                     from_ortho_set(g, iota(g, t))))
        tally(inj, s == t);
  rep.checks.push_back(inj);

  return rep;
}

inline SuiteReport suite_bisection_agreement(const DirectedGraph& g,
                                             const SuiteOptions& opt) {
  SuiteReport rep{"thm-3-20"};
  if (!ck_qualifies(g)) {
    rep.checks.push_back(
        {"precondition: every in-degree at least 2 and finite", 1, 1,
         "graph does not qualify"});
    return rep;
  }
  auto elems = enumerate_elements(g, opt.depth);
  auto sets = enumerate_orthosets(g, elems, 2);

  CheckResult tri{"three models decide equality identically"};
  for (const auto& a : sets) {
    CkElement ca = CkElement::from(g, a);
    CylinderMap ma = from_ortho_set(g, a);
    Bisection ba = theta_bar(g, ca);
    for (const auto& b : sets) {
      CkElement cb = CkElement::from(g, b);
      bool e1 = equiv(g, a, b, opt.arrow_cap);
      bool e2 = maps_equal(g, ma, from_ortho_set(g, b));
      bool e3 = bisections_equal(g, ba, theta_bar(g, cb));
      tally(tri, e1 == e2 && e2 == e3);
    }
  }
  rep.checks.push_back(tri);

  CheckResult hom{"products agree across the three models"};
  for (const auto& a : sets)
    for (const auto& b : sets) {
      OrthoSet ab = product(g, a, b);
      bool maps_ok = maps_equal(g, from_ortho_set(g, ab),
                                compose(g, from_ortho_set(g, a),
                                        from_ortho_set(g, b)));
      bool bis_ok = bisections_equal(
          g, theta_bar(g, CkElement::from(g, ab)),
          bisection_multiply(g, theta_bar(g, CkElement::from(g, a)),
                             theta_bar(g, CkElement::from(g, b))));
      tally(hom, maps_ok && bis_ok);
    }
  rep.checks.push_back(hom);

  CheckResult shifts{"the shift datum is additive under products"};
  for (const auto& s : elems)
    for (const auto& t : elems) {
      BasisPair p1{s.left(), s.right()};
      BasisPair p2{t.left(), t.right()};
      if (auto p = z_product(g, p1, p2))
        tally(shifts, shift(*p) == shift(p1) + shift(p2));
    }
  rep.checks.push_back(shifts);

  CheckResult unit{"identity basis sets split along incoming edges"};
  for (const VertexId& v : g.vertices()) {
    Bisection whole = theta(g, GisElement::identity_at(v));
    std::vector<BasisPair> parts;
    for (const EdgeId& e : g.in_edges(v)) {
      Path p = Path::of_edge(g, e);
      parts.emplace_back(p, p);
    }
    tally(unit, bisections_equal(g, whole, Bisection::make(g, parts)));
  }
  rep.checks.push_back(unit);

  return rep;
}

inline SuiteReport suite_completion_laws(const DirectedGraph& g,
                                         const SuiteOptions& opt) {
  SuiteReport rep{"ck-laws"};
  if (!ck_qualifies(g)) {
    rep.checks.push_back(
        {"precondition: every in-degree at least 2 and finite", 1, 1,
         "graph does not qualify"});
    return rep;
  }
  auto elems = enumerate_elements(g, opt.depth);
  auto sets = enumerate_orthosets(g, elems, 2);

  CheckResult hom{"delta is a homomorphism"};
  for (const auto& s : elems)
    for (const auto& t : elems)
      tally(hom, ck_equal(g, ck_multiply(g, delta(g, s), delta(g, t)),
                          delta(g, multiply(g, s, t))));
  rep.checks.push_back(hom);

  CheckResult inj{"delta is injective and 0-restricted here"};
  for (const auto& s : elems) {
    tally(inj, !delta(g, s).is_zero());
    for (const auto& t : elems)
      if (ck_equal(g, delta(g, s), delta(g, t))) tally(inj, s == t);
  }
  rep.checks.push_back(inj);

  CheckResult ck2{"every class is a join of element images"};
  for (const auto& a : sets) {
    CkElement c = CkElement::from(g, a);
    CkElement join;  // zero
    for (const GisElement& s : a) join = ck_join(g, join, delta(g, s));
    tally(ck2, ck_equal(g, c, join));
  }
  rep.checks.push_back(ck2);

  CheckResult ck3{"each identity is the join of its covering idempotents"};
  for (const VertexId& v : g.vertices()) {
    GisElement one = GisElement::identity_at(v);
    CkElement join;
    for (const GisElement& f : covered_idempotents(g, one))
      join = ck_join(g, join, delta(g, f));
    tally(ck3, ck_equal(g, delta(g, one), join));
  }
  rep.checks.push_back(ck3);

  CheckResult quot{"orthogonal joins pass to the quotient"};
  CheckResult dist{"multiplication distributes over joins"};
  for (const auto& a : sets)
    for (const auto& b : sets) {
      bool orth = true;
      for (const GisElement& s : a) {
        for (const GisElement& t : b)
          if (!orthogonal(g, s, t)) {
            orth = false;
            break;
          }
        if (!orth) break;
      }
      if (!orth) continue;
      OrthoSet joined = ortho_join(g, a, b);
      CkElement cj = ck_join(g, CkElement::from(g, a), CkElement::from(g, b));
      tally(quot, ck_equal(g, cj, CkElement::from(g, joined)));
      for (const auto& s : elems) {
        CkElement c = delta(g, s);
        CkElement lhs = ck_multiply(g, c, cj);
        CkElement rhs = ck_join(g, ck_multiply(g, c, CkElement::from(g, a)),
                                ck_multiply(g, c, CkElement::from(g, b)));
        tally(dist, ck_equal(g, lhs, rhs));
      }
    }
  rep.checks.push_back(quot);
  rep.checks.push_back(dist);

  // Boolean structure of the idempotent classes.
  std::vector<CkElement> idem_classes;
  for (const auto& a : sets)
    if (all_idempotent(a)) idem_classes.push_back(CkElement::from(g, a));

  CheckResult boole{"idempotent classes form a boolean algebra"};
  for (const auto& e : idem_classes)
    for (const auto& f : idem_classes) {
      CkElement m = idempotent_meet(g, e, f);
      CkElement d = idempotent_difference(g, e, f);
      bool ok = ck_equal(g, ck_join(g, m, d), e) &&
                idempotent_meet(g, d, f).is_zero() &&
                ck_equal(g, idempotent_meet(g, e, f), idempotent_meet(g, f, e)) &&
                ck_equal(g, ck_multiply(g, e, f), m);
      tally(boole, ok);
    }
  rep.checks.push_back(boole);

  CheckResult bdist{"meet distributes over idempotent joins"};
  for (const auto& e : idem_classes)
    for (const auto& f : idem_classes)
      for (const auto& h : idem_classes) {
        CkElement fj = ck_join(g, f, h);
        CkElement lhs = idempotent_meet(g, e, fj);
        CkElement rhs =
            ck_join(g, idempotent_meet(g, e, f), idempotent_meet(g, e, h));
        tally(bdist, ck_equal(g, lhs, rhs));
      }
  rep.checks.push_back(bdist);

  CheckResult c2j{"covers become joins"};
  std::mt19937 rng(7081);
  for (const auto& s : elems) {
    OrthoSet cover = expand_once(g, iota(g, s), rng, opt.depth + 1);
    CkElement join;
    for (const GisElement& m : cover) join = ck_join(g, join, delta(g, m));
    tally(c2j, ck_equal(g, delta(g, s), join));
  }
  rep.checks.push_back(c2j);

  return rep;
}

inline SuiteReport suite_bratteli(const DirectedGraph& g,
                                  const SuiteOptions& opt) {
  SuiteReport rep{"bratteli"};
  VertexId root;
  if (opt.root) {
    root = *opt.root;
  } else {
    std::vector<VertexId> sinks;
    for (const VertexId& v : g.vertices())
      if (g.out_degree(v) == 0) sinks.push_back(v);
    if (sinks.size() != 1) {
      rep.checks.push_back({"root inference", 1, 1,
                            "expected exactly one sink, found " +
                                std::to_string(sinks.size())});
      return rep;
    }
    root = sinks.front();
  }
  BratteliValidation val = validate_bratteli(g, root);
  CheckResult axioms{"leveled-graph axioms"};
  axioms.checked = 1;
  if (!val.ok()) {
    axioms.failures = 1;
    for (const auto& v : val.violations) rep.diagnostics.push_back(v);
    rep.checks.push_back(axioms);
    return rep;
  }
  rep.checks.push_back(axioms);
  BmReport bm = check_bm_axioms(*val.value, opt.depth);
  for (const auto& c : bm.checks) {
    CheckResult cr{c.name, c.checked, c.failures, c.note};
    rep.checks.push_back(cr);
  }
  return rep;
}

inline SuiteReport suite_branching(const DirectedGraph& g,
                                   const SuiteOptions& opt) {
  SuiteReport rep{"branching"};
  if (!opt.branching_text) {
    rep.checks.push_back({"branching system supplied", 1, 1,
                          "no branching-system file was provided"});
    return rep;
  }
  BranchingSystem bs = parse_branching_system(*opt.branching_text, g);
  StrongReport strong = validate_strong(g, bs);
  CheckResult sc{"system is strong"};
  sc.checked = strong.checks.size();
  for (const auto& c : strong.checks) {
    if (!c.pass) {
      ++sc.failures;
      rep.diagnostics.push_back(c.name + ": " + c.note);
    }
  }
  rep.checks.push_back(sc);
  if (sc.failures != 0) return rep;

  auto elems = enumerate_elements(g, opt.depth);
  CheckResult hom{"representation preserves products"};
  for (const auto& s : elems)
    for (const auto& t : elems)
      tally(hom, represent(g, bs, multiply(g, s, t)) ==
                     represent(g, bs, s).after(represent(g, bs, t)));
  rep.checks.push_back(hom);

  CheckResult zr{"representation is 0-restricted"};
  for (const auto& s : elems) tally(zr, !represent(g, bs, s).is_empty());
  rep.checks.push_back(zr);

  CheckResult cls{"equivalent sets represent identically"};
  std::mt19937 rng(40961);
  auto sets = enumerate_orthosets(g, elems, 2);
  std::size_t samples = 0;
  for (std::size_t attempts = 0; samples < 100 && attempts < 10000 && !sets.empty();
       ++attempts) {
    const OrthoSet& base =
        sets[std::uniform_int_distribution<std::size_t>(0, sets.size() - 1)(rng)];
    OrthoSet expanded = base;
    std::size_t steps = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    for (std::size_t i = 0; i < steps; ++i)
      expanded = expand_once(g, expanded, rng, opt.depth + 2);
    if (expanded == base) continue;
    ++samples;
    bool ok = equiv(g, base, expanded, opt.arrow_cap) &&
              represent_ck(g, bs, CkElement::from(g, base)) ==
                  represent_ck(g, bs, CkElement::from(g, expanded));
    tally(cls, ok);
  }
  rep.checks.push_back(cls);

  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "gis-laws", "lemma-1-7", "lemma-2-9", "lemma-3-8", "thm-3-13",
      "thm-3-20", "ck-laws",  "bratteli",  "branching"};
  return names;
}

inline SuiteReport run_suite(const DirectedGraph& g, const std::string& name,
                             const SuiteOptions& opt = {}) {
  if (name == "gis-laws") return suite_gis_laws(g, opt);
  if (name == "lemma-1-7") return suite_unambiguity(g, opt);
  if (name == "lemma-2-9") return suite_degree_dichotomies(g, opt);
  if (name == "lemma-3-8") return suite_equivalence_oracle(g, opt);
  if (name == "thm-3-13") return suite_cylinder_agreement(g, opt);
  if (name == "thm-3-20") return suite_bisection_agreement(g, opt);
  if (name == "ck-laws") return suite_completion_laws(g, opt);
  if (name == "bratteli") return suite_bratteli(g, opt);
  if (name == "branching") return suite_branching(g, opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace grism
