#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "upmnet/derivation.hpp"
#include "upmnet/error.hpp"
#include "upmnet/generators.hpp"
#include "upmnet/sequentialization.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/translations.hpp"

using namespace upmnet;
using K = LinkKind;
using R = DerivationNode::Rule;

namespace {

std::vector<LinkId> subtree_links(const Derivation& d, int i) {
  std::vector<LinkId> out = d.links_below(i);
  if (d.at(i).rule != R::Mix) out.push_back(d.at(i).link);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("single axiom sequentializes to one ax rule") {
  const SequentializationResult r = mix_sequentialize(fixtures::single_ax_net());
  REQUIRE(r.correct());
  CHECK(r.derivation->nodes.size() == 1);
  CHECK(r.derivation->at(r.derivation->root).rule == R::Ax);
  const UpmDerivation u = derivation_to_upm(fixtures::single_ax_net(), *r.derivation);
  const UpmNode& top = u.at(u.root);
  CHECK(top.kind == UpmNode::Kind::Join);
  CHECK(u.at(top.left).kind == UpmNode::Kind::Empty);
  CHECK(u.at(top.right).kind == UpmNode::Kind::Empty);
}

TEST_CASE("tensor and pars over two axioms: par, par, tensor, axioms") {
  const ProofStructure ps = fixtures::tensor_par_par_net();
  const SequentializationResult r = mix_sequentialize(ps);
  REQUIRE(r.correct());
  const Derivation& d = *r.derivation;
  const DerivationNode& top = d.at(d.root);
  CHECK(top.rule == R::Par);
  CHECK(top.link == 4);
  const DerivationNode& mid = d.at(top.left);
  CHECK(mid.rule == R::Par);
  CHECK(mid.link == 3);
  const DerivationNode& low = d.at(mid.left);
  CHECK(low.rule == R::Tensor);
  CHECK(low.link == 2);
  CHECK(d.at(low.left).link == 0);
  CHECK(d.at(low.right).link == 1);
  CHECK(validate_derivation(ps, d));
  const UpmDerivation u = derivation_to_upm(ps, d);
  CHECK(u.count(UpmNode::Kind::Join) == 5);
  CHECK(u.count(UpmNode::Kind::Union) == 0);
  CHECK(structurally_equal(upm_to_derivation(ps, u), d));
}

TEST_CASE("building the same net by hand, par after par") {
  const ProofStructure ps = fixtures::tensor_par_par_net();
  Derivation d;
  const int a0 = d.add({R::Ax, 0, -1, -1});
  const int a1 = d.add({R::Ax, 1, -1, -1});
  const int t = d.add({R::Tensor, 2, a0, a1});
  const int p3 = d.add({R::Par, 3, t, -1});
  d.root = d.add({R::Par, 4, p3, -1});
  CHECK(validate_derivation(ps, d));
  Derivation swapped = d;
  std::swap(swapped.nodes[3].link, swapped.nodes[4].link);
  CHECK_FALSE(validate_derivation(ps, swapped));
  Derivation flipped = d;
  std::swap(flipped.nodes[2].left, flipped.nodes[2].right);
  CHECK_FALSE(validate_derivation(ps, flipped));
  Derivation missing = d;
  missing.root = p3;
  CHECK_FALSE(validate_derivation(ps, missing));
  CHECK(pretty_print(ps, d).find("tensor 2") != std::string::npos);
}

TEST_CASE("ring net: one Mix on each side of the bijection") {
  const ProofStructure ps = fixtures::mix_ring_net();
  const SequentializationResult r = mix_sequentialize(ps);
  REQUIRE(r.correct());
  CHECK(r.derivation->count(R::Mix) == 1);
  CHECK(derivation_to_upm(ps, *r.derivation).count(UpmNode::Kind::Union) == 1);
  for (const Derivation& d : enumerate_sequentializations(ps, 1000)) {
    CHECK(d.count(R::Mix) == 1);
    CHECK(derivation_to_upm(ps, d).count(UpmNode::Kind::Union) == 1);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_sequentializations(fixtures::single_ax_net(), 10).size() == 1);
  CHECK(enumerate_sequentializations(fixtures::twin_halves_net(), 1000).size() == 1);
  const auto ring = enumerate_sequentializations(fixtures::mix_ring_net(), 1000);
  CHECK(ring.size() >= 2);
  std::vector<LinkId> roots;
  for (const Derivation& d : ring) roots.push_back(d.at(d.root).link);
  CHECK(std::count(roots.begin(), roots.end(), 0) > 0);
  CHECK(std::count(roots.begin(), roots.end(), 2) > 0);
  CHECK(std::count(roots.begin(), roots.end(), 1) == 0);
  CHECK_THROWS_AS(enumerate_sequentializations(fixtures::mix_ring_net(), 1), Error);
}

TEST_CASE("incorrect nets yield a switching cycle and no derivation") {
  const ProofStructure ps = fixtures::tensor_par_par_net().with_kind(3, K::Tensor);
  const SequentializationResult r = mix_sequentialize(ps);
  CHECK_FALSE(r.correct());
  REQUIRE(r.witness);
  CHECK(is_switching_cycle(correctness_graph(ps), *r.witness));
  CHECK(enumerate_sequentializations(ps, 100).empty());
}

TEST_CASE("conversions reject derivations of another net") {
  const ProofStructure ps = fixtures::tensor_par_par_net();
  const Derivation d = *mix_sequentialize(fixtures::lone_tensor_net()).derivation;
  CHECK_THROWS_AS(derivation_to_upm(ps, d), Error);
  const UpmDerivation u = derivation_to_upm(fixtures::lone_tensor_net(), d);
  CHECK_THROWS_AS(upm_to_derivation(ps, u), Error);
}

TEST_CASE("property: sequentialization agrees with the brute-force verdict and validates") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    NetParams p;
    p.size = 1 + rng.index(18);
    p.max_pars = 10;
    ProofStructure ps = generate_correct_net(rng, p);
    if (rng.chance(1, 2)) ps = rewire_premise(rng, ps);
    const SequentializationResult r = mix_sequentialize(ps);
    CHECK(r.correct() == dr_check(ps, Mode::Mix).correct);
    if (r.correct()) {
      CHECK(validate_derivation(ps, *r.derivation));
    } else {
      CHECK(is_switching_cycle(correctness_graph(ps), *r.witness));
    }
  }
}

TEST_CASE("property: every enumerated derivation validates and round-trips") {
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    NetParams p;
    p.size = 1 + rng.index(10);
    const ProofStructure ps = generate_correct_net(rng, p);
    const auto all = enumerate_sequentializations(ps, 100000);
    const MatchedGraph gf = graphification(ps);
    const auto upms = enumerate_upm_derivations(gf.graph, gf.matching, 100000);
    CHECK(all.size() == upms.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      const Derivation& d = all[k];
      CHECK(validate_derivation(ps, d));
      const UpmDerivation u = derivation_to_upm(ps, d);
      CHECK(structurally_equal(u, upms[k]));
      CHECK(structurally_equal(upm_to_derivation(ps, u), d));
      // A tensor's premises lie in different pieces once it is removed.
      for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
        const DerivationNode& node = d.at(n);
        if (node.rule != R::Tensor) continue;
        const auto left = subtree_links(d, node.left);
        const LinkId a = ps.edge(ps.in_edges(node.link)[0]).source;
        const LinkId b = ps.edge(ps.in_edges(node.link)[1]).source;
        CHECK(std::binary_search(left.begin(), left.end(), a));
        CHECK_FALSE(std::binary_search(left.begin(), left.end(), b));
      }
    }
  }
}
