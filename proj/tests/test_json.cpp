#include <doctest.h>

#include "fixtures.hpp"
#include "upmnet/error.hpp"
#include "upmnet/generators.hpp"
#include "upmnet/json_io.hpp"
#include "upmnet/sequentialization.hpp"
#include "upmnet/translations.hpp"

using namespace upmnet;

TEST_CASE("nets, graphs and derivations round-trip through JSON") {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    NetParams p;
    p.size = 1 + rng.index(30);
    const ProofStructure ps = generate_correct_net(rng, p);
    CHECK(net_from_json(Json::parse(to_json(ps).dump())) == ps);
    const Derivation d = *mix_sequentialize(ps).derivation;
    CHECK(structurally_equal(derivation_from_json(to_json(d)), d));
    const UpmDerivation u = derivation_to_upm(ps, d);
    CHECK(structurally_equal(upm_derivation_from_json(to_json(u)), u));
    const MatchedGraph gf = graphification(ps);
    const Json gj = to_json(gf.graph, gf.matching);
    const Graph g = graph_from_json(gj);
    CHECK(matching_from_json(gj, g) == gf.matching);
  }
}

TEST_CASE("malformed documents are input errors") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CapExceeded;
  };
  CHECK(code([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[0,2]]})")); }) == ErrorCode::InvalidInput);
  CHECK(code([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[0,1],[1,0]]})")); }) == ErrorCode::InvalidInput);
  CHECK(code([] { net_from_json(Json::parse(R"({"links":[{"id":0,"kind":"with"}],"edges":[]})")); }) ==
        ErrorCode::InvalidInput);
  CHECK(code([] { net_from_json(Json::parse(R"({"links":[{"id":3,"kind":"ax"}],"edges":[]})")); }) ==
        ErrorCode::InvalidInput);
  CHECK(code([] { derivation_from_json(Json::parse(R"({"root":4,"nodes":[]})")); }) == ErrorCode::InvalidInput);
}

TEST_CASE("transition systems and paired graphs read back") {
  const PairedGraph star = fixtures::star_with_pairs();
  const TransitionSystem t = pairs_to_transitions(star);
  CHECK(transitions_from_json(to_json(t), star.graph) == t);
  Json doc = to_json(star.graph);
  doc["pairs"] = Json::array({Json::array({2, 3}), Json::array({4, 5})});
  CHECK(paired_graph_from_json(doc).pair_vertex == std::vector<VertexId>{4, 4});
}
