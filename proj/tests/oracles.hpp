#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "upmnet/graph.hpp"
#include "upmnet/proof_structure.hpp"

namespace oracles {

using namespace upmnet;

/// Size of a maximum matching by exhaustive branching.
int max_matching_size(const Graph& g);

/// Any alternating path from u to v through the matching edge e, by
/// exhaustive search over simple paths.
bool alternating_path_exists(const Graph& g, const Matching& m, VertexId u, VertexId v, EdgeId e);

/// e is a bridge iff deleting it raises the component count.
bool is_bridge_by_deletion(const Graph& g, EdgeId e);

/// Alternating cycles counted by length, each cycle once.
std::map<std::size_t, std::size_t> alternating_cycle_counts(const Graph& g, const Matching& m);

/// p lies on a path between the premises of the par q in some switching
/// graph with q removed.
bool switching_dependency(const ProofStructure& ps, LinkId p, LinkId q);

}  // namespace oracles
