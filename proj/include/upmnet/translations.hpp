#pragma once

#include <vector>

#include "upmnet/graph.hpp"
#include "upmnet/proof_structure.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/transitions.hpp"

namespace upmnet {

/// A graph with a perfect matching, plus per-edge provenance ids whose
/// meaning depends on the translation that produced it.
struct MatchedGraph {
  Graph graph;
  Matching matching;
  std::vector<std::vector<int>> provenance;
};

/// Matching edge d joins 2d (upper, source side) and 2d + 1 (lower, target
/// side) for every directed edge d, conclusion edges included; provenance of
/// a matching edge is {d}, of a non-matching edge the link inducing it.
MatchedGraph rb_graph(const ConclusionNet& cn);

/// Matching edge l joins a_l = 2l and b_l = 2l + 1. A tensor's first premise
/// attaches to a_l and its second to b_l; a par's premises both attach to
/// a_l. Coinciding edges are merged, so provenance of a non-matching edge
/// lists every proof-structure edge producing it.
MatchedGraph graphification(const ProofStructure& ps);

inline VertexId graph_a(LinkId l) { return 2 * l; }
inline VertexId graph_b(LinkId l) { return 2 * l + 1; }

/// Fast MLL+Mix correctness: uniqueness of the graphification's matching.
bool is_mix_correct(const ProofStructure& ps);

struct Proofification {
  ProofStructure net;
  std::vector<LinkId> link_of_edge;         // ax for a non-matching edge, tensor for a matching one
  std::vector<int> edge_of_link;            // inverse on those links, -1 elsewhere
  std::vector<std::vector<LinkId>> pars_of_vertex;
  std::vector<LinkId> leaf_ax_of_vertex;    // ax created for a degree-1 vertex, or -1
  std::vector<int> b_edge;                  // per vertex, the edge entering its tensor
};

/// One ax per non-matching edge, per vertex a left comb of pars over its
/// non-matching neighbours in ascending order, one tensor per matching edge.
Proofification proofification(const Graph& g, const Matching& m);

/// Vertex 2e is (e, edge.u) and 2e + 1 is (e, edge.v); matching edge e joins
/// them; each allowed transition adds one non-matching edge with provenance
/// {e, f}.
MatchedGraph pm_line_graph(const Graph& g, const TransitionSystem& t);

/// Links of the matching edges along c, joined by the proof-structure edges
/// behind c's non-matching edges. Throws NotAlternating.
SwitchingCycle alternating_to_switching(const ProofStructure& ps, const MatchedGraph& graphified,
                                        const AlternatingCycle& c);

/// Right inverse of the above. Throws NotASwitchingCycle.
AlternatingCycle switching_to_alternating(const ProofStructure& ps, const MatchedGraph& graphified,
                                          const SwitchingCycle& c);

/// rb_graph(cn) equals the PM-line graph of cn's correctness graph under the
/// pairs-as-transitions system, vertex for vertex.
bool verify_rb_equals_lpm(const ConclusionNet& cn);

}  // namespace upmnet
