#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "grism/element.hpp"
#include "grism/suites.hpp"
#include "support.hpp"

using namespace grism;
using namespace grism::testing;

namespace {

// Order oracle: search for the witness path directly instead of stripping
// prefixes.
bool brute_leq(const DirectedGraph& g, const GisElement& s,
               const GisElement& t, std::size_t max_len) {
  if (s.is_zero()) return true;
  if (t.is_zero()) return false;
  for (const Path& p : enumerate_paths(g, max_len)) {
    if (p.range(g) != t.left().domain(g)) continue;
    if (concat(g, t.left(), p) == s.left() &&
        concat(g, t.right(), p) == s.right())
      return true;
  }
  return false;
}

// Meet oracle: the maximum of the common lower bounds found by enumeration.
GisElement brute_meet(const DirectedGraph& g, const GisElement& s,
                      const GisElement& t, std::size_t depth) {
  GisElement best = GisElement::zero();
  for (const GisElement& u : enumerate_elements(g, depth))
    if (leq(g, u, s) && leq(g, u, t) && leq(g, best, u)) best = u;
  return best;
}

}  // namespace

TEST_CASE("multiplication follows the comparability cases") {
  const DirectedGraph& g = p2();
  // a b^-1 . b 1^-1 = a 1^-1 (the middle paths cancel exactly).
  REQUIRE(multiply(g, el(g, "a*b^-1"), el(g, "b*1_v^-1")) == el(g, "a*1_v^-1"));
  // 1 a^-1 . a 1^-1 = 1 1^-1.
  REQUIRE(multiply(g, el(g, "1_v*a^-1"), el(g, "a*1_v^-1")) ==
          el(g, "1_v*1_v^-1"));
  // 1 a^-1 . b 1^-1 = 0: distinct loops are incomparable.
  REQUIRE(multiply(g, el(g, "1_v*a^-1"), el(g, "b*1_v^-1")).is_zero());
  // Zero absorbs.
  REQUIRE(multiply(g, GisElement::zero(), el(g, "a*a^-1")).is_zero());

  SECTION("strict-extension cases carry the leftover path") {
    REQUIRE(multiply(g, el(g, "a*b^-1"), el(g, "ba*1_v^-1")) ==
            el(g, "aa*1_v^-1"));
    REQUIRE(multiply(g, el(g, "a*ba^-1"), el(g, "b*1_v^-1")) ==
            el(g, "a*a^-1"));
  }
}

TEST_CASE("inversion") {
  const DirectedGraph& g = p2();
  REQUIRE(inverse(g, el(g, "a*b^-1")) == el(g, "b*a^-1"));
  REQUIRE(inverse(g, GisElement::zero()).is_zero());
  GisElement e = el(g, "a*a^-1");
  REQUIRE(inverse(g, e) == e);
  for (const GisElement& s : enumerate_elements(g, 2))
    REQUIRE(multiply(g, multiply(g, s, inverse(g, s)), s) == s);
}

TEST_CASE("natural partial order") {
  const DirectedGraph& g = p2();
  auto r = natural_leq(g, el(g, "ab*bb^-1"), el(g, "a*b^-1"));
  REQUIRE(r.holds);
  REQUIRE(*r.witness == Path::of_edge(g, "b"));

  GisElement s = el(g, "ab*ba^-1");
  auto refl = natural_leq(g, s, s);
  REQUIRE(refl.holds);
  REQUIRE(refl.witness->is_empty());

  REQUIRE(!leq(g, el(g, "a*a^-1"), el(g, "b*b^-1")));

  SECTION("agrees with the witness-search oracle") {
    auto elems = enumerate_elements(g, 2);
    for (const GisElement& s2 : elems)
      for (const GisElement& t2 : elems)
        REQUIRE(leq(g, s2, t2) == brute_leq(g, s2, t2, 2));
  }
}

TEST_CASE("meets") {
  const DirectedGraph& g = p2();
  REQUIRE(meet(g, el(g, "a*b^-1"), el(g, "ab*bb^-1")) == el(g, "ab*bb^-1"));
  GisElement s = el(g, "a*b^-1");
  REQUIRE(meet(g, s, s) == s);
  REQUIRE(meet(g, el(g, "a*a^-1"), el(g, "b*b^-1")).is_zero());

  SECTION("agrees with the enumeration oracle") {
    for (const GisElement& s2 : enumerate_elements(g, 1))
      for (const GisElement& t2 : enumerate_elements(g, 1))
        REQUIRE(meet(g, s2, t2) == brute_meet(g, s2, t2, 3));
  }
}

TEST_CASE("compatibility and orthogonality") {
  const DirectedGraph& g = p2();
  REQUIRE(orthogonal(g, el(g, "a*a^-1"), el(g, "b*b^-1")));
  GisElement s = el(g, "a*b^-1");
  REQUIRE(compatible(g, s, s));
  REQUIRE(compatible(g, el(g, "a*b^-1"), el(g, "ab*bb^-1")));
  REQUIRE(!orthogonal(g, el(g, "a*b^-1"), el(g, "ab*bb^-1")));
}

TEST_CASE("Green's relations in the free-category specialisation") {
  const DirectedGraph& g = p2();
  REQUIRE(greens(g, el(g, "a*b^-1"), el(g, "b*b^-1"), Greens::L));
  REQUIRE(!greens(g, el(g, "a*a^-1"), el(g, "b*b^-1"), Greens::L));
  REQUIRE(greens(g, el(g, "a*b^-1"), el(g, "a*a^-1"), Greens::R));

  // All nonzero elements over one vertex are D-related.
  auto elems = enumerate_elements(g, 2);
  for (const GisElement& s : elems)
    for (const GisElement& t : elems) REQUIRE(greens(g, s, t, Greens::D));

  DirectedGraph split = parse_graph("vertex u\nvertex v\nedge a u u\nedge b v v\n");
  GisElement au = GisElement::identity_at("u");
  GisElement av = GisElement::identity_at("v");
  REQUIRE(!greens(split, au, av, Greens::JLeq));

  REQUIRE_THROWS(greens(g, GisElement::zero(), el(g, "a*a^-1"), Greens::L));
}

TEST_CASE("maximal idempotents") {
  const DirectedGraph& g = p2();
  GisElement one = el(g, "1_v*1_v^-1");
  REQUIRE(maximal_idempotent_over(g, el(g, "ab*ab^-1")) == one);
  REQUIRE(maximal_idempotent_over(g, one) == one);

  const DirectedGraph& h = two_cycle();
  // r(e) = v, so the maximal idempotent over e e^-1 sits at v.
  REQUIRE(maximal_idempotent_over(h, el(h, "e*e^-1")) ==
          GisElement::identity_at("v"));

  for (const GisElement& s : enumerate_elements(g, 2))
    REQUIRE(leq(g, multiply(g, s, inverse(g, s)),
                maximal_idempotent_over(g, s)));
}

TEST_CASE("covered idempotents") {
  const DirectedGraph& g = p2();
  auto hat1 = covered_idempotents(g, el(g, "1_v*1_v^-1"));
  REQUIRE(hat1 == std::vector<GisElement>{el(g, "a*a^-1"), el(g, "b*b^-1")});

  auto hata = covered_idempotents(g, el(g, "a*a^-1"));
  REQUIRE(hata ==
          std::vector<GisElement>{el(g, "aa*aa^-1"), el(g, "ab*ab^-1")});

  DirectedGraph lone = parse_graph("vertex v\n");
  REQUIRE(covered_idempotents(lone, GisElement::identity_at("v")).empty());

  SECTION("each member is covered: nothing sits strictly between") {
    for (const GisElement& e : enumerate_idempotents(g, 1))
      for (const GisElement& c : covered_idempotents(g, e))
        for (const GisElement& mid : enumerate_idempotents(g, 3))
          if (leq(g, c, mid) && leq(g, mid, e))
            REQUIRE((mid == c || mid == e));
  }

  REQUIRE_THROWS(covered_idempotents(g, el(g, "a*b^-1")));
}

TEST_CASE("idempotent weight") {
  const DirectedGraph& g = p2();
  REQUIRE(weight(el(g, "1_v*1_v^-1")) == 0);
  REQUIRE(weight(el(g, "ab*ab^-1")) == 2);
  REQUIRE(weight(el(g, "a*a^-1")) == 1);
  REQUIRE_THROWS(weight(el(g, "a*b^-1")));
  REQUIRE_THROWS(weight(GisElement::zero()));
}
