#pragma once

// Bratteli graph recognition, the local inverse monoid at the root with its
// weight function, axiom verification at bounded weight, and finite
// branching-system representations.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grism/arrow.hpp"
#include "grism/ck.hpp"
#include "grism/element.hpp"

namespace grism {

struct BratteliGraph {
  const DirectedGraph* graph = nullptr;
  VertexId root;
  std::map<VertexId, std::size_t> levels;  // distance to root
  std::size_t max_level = 0;
};

struct BratteliValidation {
  std::optional<BratteliGraph> value;
  std::vector<std::string> violations;  // named by axiom
  bool ok() const { return value.has_value(); }
};

// Levels are shortest distance to the root; the axioms are then checked
// against them.  Vertices at the maximal level necessarily have no incoming
// edges in a finite truncation, so the no-sources axiom exempts them.
inline BratteliValidation validate_bratteli(const DirectedGraph& g,
                                            const VertexId& root) {
  BratteliValidation out;
  g.require_vertex(root);

  std::map<VertexId, std::size_t> level{{root, 0}};
  std::queue<VertexId> work;
  work.push(root);
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop();
    for (const EdgeId& e : g.in_edges(v)) {
      const VertexId& u = g.edge(e).source;
      if (level.emplace(u, level[v] + 1).second) work.push(u);
    }
  }
  for (const VertexId& v : g.vertices())
    if (level.count(v) == 0)
      out.violations.push_back("B3: vertex " + v +
                               " cannot be assigned a level (no path to root)");

  if (g.out_degree(root) != 0)
    out.violations.push_back("B1: root " + root + " is not a sink");
  for (const VertexId& v : g.vertices())
    if (v != root && g.out_degree(v) == 0)
      out.violations.push_back("B1: " + v + " is a second sink");

  std::size_t max_level = 0;
  for (const auto& [v, l] : level) max_level = std::max(max_level, l);
  for (const auto& [v, l] : level)
    if (l < max_level && g.in_degree(v) == 0)
      out.violations.push_back("B2: vertex " + v + " is a source");

  for (const auto& e : g.edges()) {
    auto ls = level.find(e.source);
    auto lt = level.find(e.target);
    if (ls == level.end() || lt == level.end()) continue;
    if (ls->second != lt->second + 1)
      out.violations.push_back("B4: edge " + e.id + " goes from level " +
                               std::to_string(ls->second) + " to level " +
                               std::to_string(lt->second));
  }

  if (out.violations.empty())
    out.value = BratteliGraph{&g, root, std::move(level), max_level};
  return out;
}

// An element of the local monoid at the root: both paths end at the root
// and share a domain.
inline GisElement local_monoid_element(const BratteliGraph& b, const Path& x,
                                       const Path& y) {
  const DirectedGraph& g = *b.graph;
  if (x.range(g) != b.root || y.range(g) != b.root)
    throw std::invalid_argument("paths must have range equal to the root");
  return GisElement::pair(g, x, y);
}

// Weight of a nonzero local monoid element: the common path length.
inline std::size_t mu(const BratteliGraph& b, const GisElement& s) {
  s.require_nonzero();
  const DirectedGraph& g = *b.graph;
  if (s.left().range(g) != b.root || s.right().range(g) != b.root)
    throw std::invalid_argument("not a local monoid element");
  return s.left().length();
}

struct BmCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string note;
};

struct BmReport {
  std::vector<BmCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (c.failures != 0) return false;
    return true;
  }
};

// Exhaustive verification over the elements of weight <= max_weight of:
// the weight axioms (order reversal, invariance on equal-domain classes),
// finiteness and non-emptiness of each weight fibre, one-step
// interpolation below, the coincidence of the two Green's equivalences,
// and the product weight formula.  Fibres are only demanded non-empty up
// to the deepest level the finite truncation has.
inline BmReport check_bm_axioms(const BratteliGraph& b,
                                std::size_t max_weight) {
  const DirectedGraph& g = *b.graph;
  BmReport report;

  std::vector<Path> paths = enumerate_paths(g, max_weight, std::nullopt, b.root);
  std::vector<GisElement> elems;
  for (const Path& x : paths)
    for (const Path& y : paths)
      if (x.domain(g) == y.domain(g)) elems.push_back(GisElement::pair(g, x, y));

  BmCheck w0{"weight-zero fibre is the identity"};
  w0.checked = 1;
  std::size_t zero_count = 0;
  for (const auto& s : elems)
    if (mu(b, s) == 0) ++zero_count;
  if (zero_count != 1) w0.failures = 1;
  report.checks.push_back(w0);

  BmCheck bm4{"weight fibres finite and non-empty"};
  std::size_t effective = std::min(max_weight, b.max_level);
  for (std::size_t n = 0; n <= effective; ++n) {
    ++bm4.checked;
    std::size_t count = 0;
    for (const auto& s : elems)
      if (mu(b, s) == n) ++count;
    if (count == 0) ++bm4.failures;
  }
  if (effective < max_weight)
    bm4.note = "fibres beyond level " + std::to_string(effective) +
               " are empty in this finite truncation";
  report.checks.push_back(bm4);

  BmCheck w1{"strictly smaller elements have strictly larger weight"};
  BmCheck w2{"weight constant on equal-domain classes"};
  BmCheck dj{"the two ideal equivalences coincide"};
  BmCheck bm5{"one-step interpolation below"};
  for (const auto& s : elems)
    for (const auto& t : elems) {
      if (leq(g, s, t) && s != t) {
        ++w1.checked;
        if (!(mu(b, s) > mu(b, t))) ++w1.failures;
        ++bm5.checked;
        bool found = false;
        for (const auto& u : elems)
          if (mu(b, u) == mu(b, t) + 1 && leq(g, s, u) && leq(g, u, t) &&
              u != t) {
            found = true;
            break;
          }
        if (!found) ++bm5.failures;
      }
      ++w2.checked;
      if (greens(g, s, t, Greens::D) && mu(b, s) != mu(b, t)) ++w2.failures;
      ++dj.checked;
      bool d_rel = greens(g, s, t, Greens::D);
      bool j_rel = greens(g, s, t, Greens::JLeq) && greens(g, t, s, Greens::JLeq);
      if (d_rel != j_rel) ++dj.failures;
    }
  report.checks.push_back(w1);
  report.checks.push_back(w2);
  report.checks.push_back(dj);
  report.checks.push_back(bm5);

  BmCheck prod{"weight of a nonzero product is the larger weight"};
  for (const auto& s : elems)
    for (const auto& t : elems) {
      GisElement st = multiply(g, s, t);
      if (st.is_zero()) continue;
      ++prod.checked;
      if (mu(b, st) != std::max(mu(b, s), mu(b, t))) ++prod.failures;
    }
  report.checks.push_back(prod);

  return report;
}

// A finite branching system: a non-empty carrier per vertex and a total
// injective map per edge from the source carrier into the target carrier.
struct BranchingSystem {
  std::map<VertexId, std::vector<std::string>> carrier;
  std::map<EdgeId, std::map<std::string, std::string>> edge_maps;
};

// File format, validated against a loaded graph:
//   carrier <vertex> <elem> <elem> ...
//   map <edge> <from-elem> <to-elem>
// Carrier labels must be globally distinct so the total carrier is a
// genuine disjoint union.
inline BranchingSystem parse_branching_system(std::string_view text,
                                              const DirectedGraph& g) {
  BranchingSystem bs;
  std::set<std::string> labels;
  std::map<std::string, VertexId> label_home;
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
      return std::runtime_error("branching file line " +
                                std::to_string(lineno) + ": " + msg);
    };
    if (kw == "carrier") {
      std::string v;
      if (!(ls >> v)) throw fail("expected: carrier <vertex> <elem>...");
      if (!g.has_vertex(v)) throw fail("unknown vertex: " + v);
      if (bs.carrier.count(v)) throw fail("carrier repeated for vertex " + v);
      std::vector<std::string> elems;
      std::string e;
      while (ls >> e) {
        if (!labels.insert(e).second)
          throw fail("carrier label reused: " + e);
        label_home[e] = v;
        elems.push_back(e);
      }
      bs.carrier[v] = std::move(elems);
    } else if (kw == "map") {
      std::string e, from, to, extra;
      if (!(ls >> e >> from >> to))
        throw fail("expected: map <edge> <from-elem> <to-elem>");
      if (ls >> extra) throw fail("trailing tokens after map entry");
      if (!g.has_edge(e)) throw fail("unknown edge: " + e);
      auto hf = label_home.find(from);
      auto ht = label_home.find(to);
      if (hf == label_home.end()) throw fail("unknown carrier element: " + from);
      if (ht == label_home.end()) throw fail("unknown carrier element: " + to);
      if (hf->second != g.edge(e).source)
        throw fail("element " + from + " does not live at d(" + e + ")");
      if (ht->second != g.edge(e).target)
        throw fail("element " + to + " does not live at r(" + e + ")");
      if (!bs.edge_maps[e].emplace(from, to).second)
        throw fail("duplicate assignment for " + e + " at " + from);
    } else {
      throw fail("unknown directive: " + kw);
    }
  }
  return bs;
}

struct StrongCheck {
  std::string name;
  bool pass = true;
  std::string note;
};

struct StrongReport {
  std::vector<StrongCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Per-vertex report: carriers non-empty, edge maps total and injective,
// and for each vertex the images of the incoming edge maps are disjoint
// and cover the carrier.  The disjointness requirement is what makes the
// induced representation land in partial bijections.
inline StrongReport validate_strong(const DirectedGraph& g,
                                    const BranchingSystem& bs) {
  StrongReport report;
  for (const VertexId& v : g.vertices()) {
    StrongCheck c{"carrier at " + v + " is non-empty"};
    auto it = bs.carrier.find(v);
    if (it == bs.carrier.end() || it->second.empty()) {
      c.pass = false;
      c.note = "missing or empty carrier";
    }
    report.checks.push_back(c);
  }
  for (const auto& e : g.edges()) {
    StrongCheck c{"edge map " + e.id + " is total and injective"};
    auto it = bs.edge_maps.find(e.id);
    const auto src = bs.carrier.find(e.source);
    if (it == bs.edge_maps.end()) {
      c.pass = false;
      c.note = "no map entries";
    } else if (src != bs.carrier.end()) {
      std::set<std::string> images;
      for (const std::string& x : src->second) {
        auto m = it->second.find(x);
        if (m == it->second.end()) {
          c.pass = false;
          c.note = "undefined at " + x;
          break;
        }
        if (!images.insert(m->second).second) {
          c.pass = false;
          c.note = "not injective at " + m->second;
          break;
        }
      }
    }
    report.checks.push_back(c);
  }
  for (const VertexId& v : g.vertices()) {
    StrongCheck c{"incoming images at " + v + " partition the carrier"};
    std::set<std::string> want;
    auto cv = bs.carrier.find(v);
    if (cv != bs.carrier.end()) want.insert(cv->second.begin(), cv->second.end());
    std::set<std::string> got;
    bool disjoint = true;
    for (const EdgeId& e : g.in_edges(v)) {
      auto it = bs.edge_maps.find(e);
      if (it == bs.edge_maps.end()) continue;
      for (const auto& [from, to] : it->second)
        if (!got.insert(to).second) disjoint = false;
    }
    if (!disjoint) {
      c.pass = false;
      c.note = "images overlap";
    } else if (got != want) {
      c.pass = false;
      c.note = g.in_degree(v) == 0
                   ? "vertex has no incoming edges, so no finite system can "
                     "cover a non-empty carrier here"
                   : "images do not cover the carrier";
    }
    report.checks.push_back(c);
  }
  return report;
}

// A partial injection on the disjoint union of the carriers.
class PartialInjection {
 public:
  PartialInjection() = default;

  static PartialInjection make(std::map<std::string, std::string> entries) {
    std::set<std::string> images;
    for (const auto& [from, to] : entries)
      if (!images.insert(to).second)
        throw std::invalid_argument("not injective at " + to);
    PartialInjection p;
    p.entries_ = std::move(entries);
    return p;
  }

  static PartialInjection identity_on(const std::vector<std::string>& xs) {
    std::map<std::string, std::string> entries;
    for (const auto& x : xs) entries.emplace(x, x);
    return make(std::move(entries));
  }

  bool is_empty() const { return entries_.empty(); }
  const std::map<std::string, std::string>& entries() const { return entries_; }

  std::optional<std::string> apply(const std::string& x) const {
    auto it = entries_.find(x);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  PartialInjection inverted() const {
    std::map<std::string, std::string> entries;
    for (const auto& [from, to] : entries_) entries.emplace(to, from);
    return make(std::move(entries));
  }

  // this after other.
  PartialInjection after(const PartialInjection& other) const {
    std::map<std::string, std::string> entries;
    for (const auto& [from, mid] : other.entries_)
      if (auto to = apply(mid)) entries.emplace(from, *to);
    return make(std::move(entries));
  }

  friend bool operator==(const PartialInjection& a, const PartialInjection& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const PartialInjection& a, const PartialInjection& b) {
    return !(a == b);
  }

 private:
  std::map<std::string, std::string> entries_;
};

namespace detail {

inline PartialInjection path_action(const DirectedGraph& g,
                                    const BranchingSystem& bs, const Path& p) {
  auto cv = bs.carrier.find(p.domain(g));
  PartialInjection cur = PartialInjection::identity_on(
      cv == bs.carrier.end() ? std::vector<std::string>{} : cv->second);
  // Rightmost edge acts first.
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
    auto em = bs.edge_maps.find(*it);
    if (em == bs.edge_maps.end())
      throw std::invalid_argument("edge map missing for " + *it);
    cur = PartialInjection::make({em->second.begin(), em->second.end()})
              .after(cur);
  }
  return cur;
}

}  // namespace detail

// theta(x y^-1) = theta(x) o theta(y)^-1 on the carrier.
inline PartialInjection represent(const DirectedGraph& g,
                                  const BranchingSystem& bs,
                                  const GisElement& s) {
  if (s.is_zero()) return PartialInjection();
  PartialInjection tx = detail::path_action(g, bs, s.left());
  PartialInjection ty = detail::path_action(g, bs, s.right());
  return tx.after(ty.inverted());
}

// The join of the representations of the class representative's members;
// orthogonality makes the union a partial injection again.
inline PartialInjection represent_ck(const DirectedGraph& g,
                                     const BranchingSystem& bs,
                                     const CkElement& c) {
  std::map<std::string, std::string> entries;
  for (const GisElement& s : c.rep()) {
    PartialInjection part = represent(g, bs, s);
    for (const auto& [from, to] : part.entries()) {
      auto [it, fresh] = entries.emplace(from, to);
      if (!fresh && it->second != to)
        throw std::logic_error("representation pieces disagree at " + from);
    }
  }
  return PartialInjection::make(std::move(entries));
}

}  // namespace grism
