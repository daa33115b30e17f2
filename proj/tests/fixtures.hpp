#pragma once

#include "upmnet/graph.hpp"
#include "upmnet/proof_structure.hpp"
#include "upmnet/switching.hpp"

namespace fixtures {

using namespace upmnet;

struct MatchedInstance {
  Graph graph;
  Matching matching;
};

inline ProofStructure net(std::vector<LinkKind> links, std::vector<Arc> edges) {
  return ProofStructure(RawProofStructure{std::move(links), std::move(edges)});
}

inline MatchedInstance matched(int n, std::vector<std::pair<int, int>> edges, std::vector<EdgeId> m) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  Matching mm(g, std::move(m));
  return {std::move(g), std::move(mm)};
}

// Vertices w0 x1 y2 z3; the square w-y-z-x carries two perfect matchings.
inline MatchedInstance square_two_matchings() {
  return matched(4, {{0, 2}, {1, 3}, {0, 1}, {2, 1}, {2, 3}}, {0, 1});
}

// Vertices w0 y1 t2 s3 x4 z5: two triangles joined by the matched edge t-s.
inline MatchedInstance two_triangles_unique() {
  return matched(6, {{0, 1}, {4, 5}, {2, 3}, {0, 2}, {1, 2}, {4, 3}, {5, 3}}, {0, 1, 2});
}

// ax0 ax1; tensor 2 and par 3 over both axioms; par 4 below them.
inline ProofStructure tensor_par_par_net() {
  using K = LinkKind;
  return net({K::Ax, K::Ax, K::Tensor, K::Par, K::Par}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 4}});
}

inline ProofStructure lone_tensor_net() {
  using K = LinkKind;
  return net({K::Ax, K::Ax, K::Tensor}, {{0, 2}, {1, 2}});
}

// Two mirrored halves (tensor 2 / par 3 over ax0 ax1, par 6 / tensor 7 over
// ax4 ax5) joined by the middle tensor 8 on the two pars.
inline ProofStructure twin_halves_net() {
  using K = LinkKind;
  return net({K::Ax, K::Ax, K::Tensor, K::Par, K::Ax, K::Ax, K::Par, K::Tensor, K::Tensor},
             {{0, 3}, {1, 3}, {0, 2}, {1, 2}, {4, 7}, {5, 7}, {4, 6}, {5, 6}, {3, 8}, {6, 8}});
}

// par0 tensor1 par2 over three axioms arranged in a ring; correct only with Mix.
inline ProofStructure mix_ring_net() {
  using K = LinkKind;
  return net({K::Par, K::Tensor, K::Par, K::Ax, K::Ax, K::Ax}, {{4, 0}, {4, 2}, {3, 0}, {3, 1}, {5, 1}, {5, 2}});
}

inline ProofStructure single_ax_net() { return net({LinkKind::Ax}, {}); }

// Centre o = 4 with pairs {xo, zo} and {wo, yo}; vertices w0 x1 y2 z3.
inline PairedGraph star_with_pairs() {
  Graph g(5);
  g.add_edge(1, 3);  // xz
  g.add_edge(0, 2);  // wy
  g.add_edge(1, 4);  // xo
  g.add_edge(3, 4);  // zo
  g.add_edge(0, 4);  // wo
  g.add_edge(2, 4);  // yo
  return PairedGraph::make(std::move(g), {{2, 3}, {4, 5}});
}

}  // namespace fixtures
