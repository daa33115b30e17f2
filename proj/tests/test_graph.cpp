#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "upmnet/error.hpp"
#include "upmnet/generators.hpp"
#include "upmnet/graph.hpp"

using namespace upmnet;

TEST_CASE("graph rejects self-loops and, outside multigraph mode, parallel edges") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(1, 0), Error);
  Graph mg = Graph::multigraph(2);
  CHECK(mg.add_edge(0, 1) == 0);
  CHECK(mg.add_edge(0, 1) == 1);
  CHECK(mg.find_edge(1, 0) == 0);
}

TEST_CASE("components are numbered by smallest member") {
  Graph g(5);
  g.add_edge(3, 4);
  g.add_edge(0, 2);
  const Components c = connected_components(g);
  CHECK(c.count == 3);
  CHECK(c.label == std::vector<int>{0, 1, 0, 2, 2});
  CHECK(c.sizes() == std::vector<int>{2, 1, 2});
}

TEST_CASE("bridges of two triangles joined by one edge") {
  const auto inst = fixtures::two_triangles_unique();
  CHECK(bridges(inst.graph) == std::vector<EdgeId>{2});
  CHECK(bridges_in_component(inst.graph, EdgeMask::all(inst.graph), 5) == std::vector<EdgeId>{2});
}

TEST_CASE("a path is all bridges, a cycle has none") {
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(bridges(path).size() == 3);
  Graph cyc(4);
  for (int i = 0; i < 4; ++i) cyc.add_edge(i, (i + 1) % 4);
  CHECK(bridges(cyc).empty());
  Graph twins = Graph::multigraph(2);
  twins.add_edge(0, 1);
  twins.add_edge(0, 1);
  CHECK(bridges(twins).empty());
}

TEST_CASE("property: bridges agree with deletion on random graphs") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 2 + rng.index(12), 150 + rng.index(300));
    const auto bs = bridges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(std::binary_search(bs.begin(), bs.end(), e) == oracles::is_bridge_by_deletion(g, e));
    }
  }
}

TEST_CASE("matching rejects shared vertices") {
  const auto inst = fixtures::square_two_matchings();
  CHECK_THROWS_AS(Matching(inst.graph, {0, 2}), Error);
  CHECK(inst.matching.is_perfect());
  CHECK(inst.matching.mate(0) == 2);
}

TEST_CASE("canonical cycle rotates to the smallest edge") {
  const auto inst = fixtures::square_two_matchings();
  const AlternatingCycle c = canonical_cycle(inst.graph, {4, 1, 2, 0});
  CHECK(c.edges.front() == 0);
  CHECK(c.length() == 4);
  CHECK(is_alternating_cycle(inst.graph, inst.matching, c));
  CHECK(canonical_cycle(inst.graph, {2, 0, 4, 1}) == c);
}

TEST_CASE("two matchings of the square differ by one alternating cycle") {
  const auto inst = fixtures::square_two_matchings();
  const Matching other(inst.graph, {2, 4});
  const BergeDecomposition d = symmetric_difference_decompose(inst.graph, inst.matching, other);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.paths.empty());
  CHECK(d.cycles[0].length() == 4);
  CHECK(enumerate_perfect_matchings(inst.graph, 10).size() == 2);
}

TEST_CASE("perfect matching enumeration respects its cap") {
  Graph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  }
  CHECK(enumerate_perfect_matchings(k4, 10).size() == 3);
  CHECK_THROWS_AS(enumerate_perfect_matchings(k4, 2), Error);
  CHECK(enumerate_perfect_matchings(Graph(0), 1).size() == 1);
}
