#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "grism/graph.hpp"
#include "support.hpp"

using namespace grism;
using namespace grism::testing;

TEST_CASE("graph file parsing") {
  const DirectedGraph& g = p2();
  REQUIRE(g.vertices().size() == 1);
  REQUIRE(g.edges().size() == 2);
  REQUIRE(g.in_degree("v") == 2);

  DirectedGraph lone = parse_graph("vertex v\n");
  REQUIRE(lone.edges().empty());
  REQUIRE(lone.in_degree("v") == 0);

  SECTION("dangling endpoint") {
    REQUIRE_THROWS_WITH(parse_graph("edge a v v\n"),
                        Catch::Matchers::ContainsSubstring("undeclared"));
  }
  SECTION("duplicate ids") {
    REQUIRE_THROWS_WITH(parse_graph("vertex v\nvertex v\n"),
                        Catch::Matchers::ContainsSubstring("duplicate"));
    REQUIRE_THROWS_WITH(parse_graph("vertex v\nedge a v v\nedge a v v\n"),
                        Catch::Matchers::ContainsSubstring("duplicate"));
  }
  SECTION("syntax error carries the line number") {
    REQUIRE_THROWS_WITH(parse_graph("vertex v\nfrobnicate\n"),
                        Catch::Matchers::ContainsSubstring("line 2"));
  }
  SECTION("comments and blank lines are ignored") {
    DirectedGraph h = parse_graph("# header\nvertex v\n\nedge a v v # loop\n");
    REQUIRE(h.edges().size() == 1);
  }
}

TEST_CASE("in-degree on the two-vertex double-edge graph") {
  const DirectedGraph& g = double_cycle();
  REQUIRE(g.in_degree("u") == 2);
  REQUIRE(g.in_degree("v") == 2);
  REQUIRE_THROWS(g.in_degree("w"));
}

TEST_CASE("path concatenation") {
  const DirectedGraph& g = p2();
  Path a = Path::of_edge(g, "a");
  Path b = Path::of_edge(g, "b");
  Path ab = concat(g, a, b);
  REQUIRE(ab.length() == 2);
  REQUIRE(ab.edges() == std::vector<EdgeId>{"a", "b"});
  REQUIRE(concat(g, Path::empty_at("v"), a) == a);
  REQUIRE(concat(g, a, Path::empty_at("v")) == a);

  const DirectedGraph& h = two_cycle();
  Path e = Path::of_edge(h, "e");  // u -> v
  Path f = Path::of_edge(h, "f");  // v -> u
  // d(e) = u = r(f), so e can be extended by f but not by itself.
  REQUIRE_NOTHROW(concat(h, e, f));
  REQUIRE_THROWS(concat(h, e, e));
  Path fe = concat(h, f, e);
  REQUIRE(fe.domain(h) == "u");
  REQUIRE(fe.range(h) == "u");
}

TEST_CASE("concatenation is associative where defined") {
  const DirectedGraph& g = double_cycle();
  auto paths = enumerate_paths(g, 2);
  for (const Path& x : paths)
    for (const Path& y : paths) {
      if (x.domain(g) != y.range(g)) continue;
      for (const Path& z : paths) {
        if (y.domain(g) != z.range(g)) continue;
        REQUIRE(concat(g, concat(g, x, y), z) ==
                concat(g, x, concat(g, y, z)));
      }
    }
}

TEST_CASE("prefix comparability") {
  const DirectedGraph& g = p2();
  Path a = Path::of_edge(g, "a");
  Path b = Path::of_edge(g, "b");
  Path ab = concat(g, a, b);

  auto r1 = prefix_comparable(g, ab, a);
  REQUIRE(r1.rel == PrefixRel::XExtendsY);
  REQUIRE(r1.witness == b);
  REQUIRE(concat(g, a, r1.witness) == ab);

  REQUIRE(prefix_comparable(g, a, b).rel == PrefixRel::Incomparable);
  REQUIRE(prefix_comparable(g, ab, ab).rel == PrefixRel::Equal);

  // The empty path is a prefix of everything based at its vertex.
  auto r2 = prefix_comparable(g, a, Path::empty_at("v"));
  REQUIRE(r2.rel == PrefixRel::XExtendsY);
  REQUIRE(r2.witness == a);
}

TEST_CASE("path enumeration") {
  const DirectedGraph& g = p2();
  auto len1 = enumerate_paths(g, 1);
  REQUIRE(len1.size() == 3);  // 1_v, a, b

  // 1 + 2 + 4 paths of length <= 2.
  auto len2 = enumerate_paths(g, 2);
  REQUIRE(len2.size() == 7);

  DirectedGraph lone = parse_graph("vertex v\n");
  auto only_empty = enumerate_paths(lone, 5);
  REQUIRE(only_empty.size() == 1);
  REQUIRE(only_empty.front().is_empty());

  SECTION("no duplicates, closed under left factors") {
    std::set<std::vector<EdgeId>> seen;
    for (const Path& p : len2) {
      REQUIRE(seen.insert(p.edges()).second);
      if (p.length() >= 1) {
        std::vector<EdgeId> prefix(p.edges().begin(), p.edges().end() - 1);
        bool found = false;
        for (const Path& q : len2)
          if (q.edges() == prefix) found = true;
        REQUIRE(found);
      }
    }
  }

  SECTION("endpoint filters") {
    const DirectedGraph& h = bratteli_b();
    auto to_root = enumerate_paths(h, 2, std::nullopt, VertexId("r"));
    // 1_r, g1, g2, and the four two-step paths.
    REQUIRE(to_root.size() == 7);
    for (const Path& p : to_root) REQUIRE(p.range(h) == "r");
    auto from_q = enumerate_paths(h, 2, VertexId("q"), VertexId("r"));
    REQUIRE(from_q.size() == 4);
  }
}

TEST_CASE("incomparable paths have no common extension") {
  const DirectedGraph& g = p2();
  auto paths = enumerate_paths(g, 3);
  for (const Path& x : paths)
    for (const Path& y : paths) {
      if (prefix_comparable(g, x, y).rel != PrefixRel::Incomparable) continue;
      for (const Path& z : paths) {
        bool extends_x = prefix_comparable(g, z, x).rel == PrefixRel::Equal ||
                         prefix_comparable(g, z, x).rel == PrefixRel::XExtendsY;
        bool extends_y = prefix_comparable(g, z, y).rel == PrefixRel::Equal ||
                         prefix_comparable(g, z, y).rel == PrefixRel::XExtendsY;
        REQUIRE(!(extends_x && extends_y));
      }
    }
}

TEST_CASE("root detection") {
  REQUIRE(has_root(p2()) == VertexId("v"));
  REQUIRE(has_root(bratteli_b()) == VertexId("r"));
  DirectedGraph split = parse_graph("vertex u\nvertex v\n");
  REQUIRE(!has_root(split).has_value());
}
