#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "upmnet/error.hpp"
#include "upmnet/generators.hpp"
#include "upmnet/matching.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/transitions.hpp"
#include "upmnet/translations.hpp"

using namespace upmnet;

TEST_CASE("no pairs means every transition is allowed") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const PairedGraph pg = PairedGraph::make(g, {});
  CHECK(pairs_to_transitions(pg) == TransitionSystem::complete(g));
}

TEST_CASE("coloured star: same-colour transitions at the centre are forbidden") {
  const PairedGraph star = fixtures::star_with_pairs();
  const TransitionSystem t = pairs_to_transitions(star);
  CHECK_FALSE(t.allows(4, 2, 3));
  CHECK_FALSE(t.allows(4, 4, 5));
  CHECK(t.allows(4, 2, 4));
  CHECK(t.allows(4, 3, 5));
  CHECK(t.allowed(4).size() == 4);
  CHECK(t.allows(1, 0, 2));
}

TEST_CASE("correctness graph transitions are forbidden exactly at par premise pairs") {
  const ProofStructure ps = fixtures::tensor_par_par_net();
  const PairedGraph pg = correctness_graph(ps);
  const TransitionSystem t = pairs_to_transitions(pg);
  const TransitionSystem all = TransitionSystem::complete(pg.graph);
  for (VertexId v = 0; v < pg.graph.vertex_count(); ++v) {
    const std::size_t expected = ps.kind(v) == LinkKind::Par ? all.allowed(v).size() - 1 : all.allowed(v).size();
    CHECK(t.allowed(v).size() == expected);
  }
  CHECK_FALSE(t.allows(3, 2, 3));
  CHECK_FALSE(t.allows(4, 4, 5));
}

TEST_CASE("transition systems reject pairs away from their vertex") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(TransitionSystem(g, {{{0, 1}}, {}, {}}), Error);
  CHECK_THROWS_AS(TransitionSystem(g, {{}}), Error);
}

TEST_CASE("triangle with all transitions has a trail of length 3") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const auto t = TransitionSystem::complete(g);
  const auto trail = find_compatible_closed_trail(g, t);
  REQUIRE(trail);
  CHECK(trail->length() == 3);
  CHECK(is_compatible_closed_trail(g, t, *trail));
  CHECK(brute_force_closed_trails(g, TransitionSystem::none(g), 10).empty());
  CHECK_FALSE(find_compatible_closed_trail(g, TransitionSystem::none(g)));
}

TEST_CASE("coloured star: two closed trails through the centre twice, no cycles") {
  const PairedGraph star = fixtures::star_with_pairs();
  const TransitionSystem t = pairs_to_transitions(star);
  const auto trails = brute_force_closed_trails(star.graph, t, 100);
  REQUIRE(trails.size() == 2);
  for (const ClosedTrail& c : trails) {
    CHECK(c.length() == 6);
    CHECK(std::count(c.vertices.begin(), c.vertices.end(), 4) == 2);
  }
  CHECK(brute_force_compatible_cycles(star.graph, t, 100).empty());
  const auto found = find_compatible_closed_trail(star.graph, t);
  REQUIRE(found);
  CHECK(std::find(trails.begin(), trails.end(), *found) != trails.end());
  const MatchedGraph lpm = pm_line_graph(star.graph, t);
  const auto counts = oracles::alternating_cycle_counts(lpm.graph, lpm.matching);
  CHECK(counts.size() == 1);
  CHECK(counts.at(12) == 2);
}

TEST_CASE("canonical trails ignore rotation and direction") {
  const PairedGraph star = fixtures::star_with_pairs();
  const auto trails = brute_force_closed_trails(star.graph, pairs_to_transitions(star), 100);
  const ClosedTrail& c = trails[0];
  ClosedTrail rotated{{c.vertices[2], c.vertices[3], c.vertices[4], c.vertices[5], c.vertices[0], c.vertices[1]},
                      {c.edges[2], c.edges[3], c.edges[4], c.edges[5], c.edges[0], c.edges[1]}};
  CHECK(canonical_trail(star.graph, rotated) == c);
  ClosedTrail reversed{{c.vertices[1], c.vertices[0], c.vertices[5], c.vertices[4], c.vertices[3], c.vertices[2]},
                       {c.edges[0], c.edges[5], c.edges[4], c.edges[3], c.edges[2], c.edges[1]}};
  CHECK(canonical_trail(star.graph, reversed) == c);
}

TEST_CASE("property: trails of length k match alternating cycles of length 2k") {
  Rng rng(51);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 3 + rng.index(6), 300 + rng.index(400));
    std::vector<std::vector<TransitionSystem::Pair>> allowed(static_cast<std::size_t>(g.vertex_count()));
    const TransitionSystem all = TransitionSystem::complete(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (auto pr : all.allowed(v)) {
        if (rng.chance(2, 3)) allowed[static_cast<std::size_t>(v)].push_back(pr);
      }
    }
    const TransitionSystem t(g, allowed);
    std::map<std::size_t, std::size_t> trails;
    for (const ClosedTrail& c : brute_force_closed_trails(g, t, 1000000)) {
      CHECK(is_compatible_closed_trail(g, t, c));
      ++trails[2 * c.length()];
    }
    const MatchedGraph lpm = pm_line_graph(g, t);
    CHECK(trails == oracles::alternating_cycle_counts(lpm.graph, lpm.matching));
    const auto found = find_compatible_closed_trail(g, t);
    CHECK(found.has_value() == !trails.empty());
    if (found) CHECK(is_compatible_closed_trail(g, t, *found));
  }
}

TEST_CASE("property: on correctness graphs, closed trails exist iff switching cycles do") {
  Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    NetParams p;
    p.size = 1 + rng.index(14);
    ProofStructure ps = generate_correct_net(rng, p);
    if (rng.chance(1, 2)) ps = rewire_premise(rng, ps);
    const PairedGraph pg = correctness_graph(ps);
    const bool trail = find_compatible_closed_trail(pg.graph, pairs_to_transitions(pg)).has_value();
    CHECK(trail == !dr_check(ps, Mode::Mix).correct);
  }
}

TEST_CASE("parallel edges close a trail of length two") {
  Graph g = Graph::multigraph(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  const auto t = TransitionSystem::complete(g);
  const auto trails = brute_force_closed_trails(g, t, 10);
  REQUIRE(trails.size() == 1);
  CHECK(trails[0].length() == 2);
  CHECK(find_compatible_closed_trail(g, t).has_value());
}
