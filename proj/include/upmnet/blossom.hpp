#pragma once

#include <cstddef>
#include <vector>

#include "upmnet/graph.hpp"
#include "upmnet/relation.hpp"

namespace upmnet {

/// Odd cycle whose vertices are matched inside the cycle except the root;
/// the stem is the root's matching edge and lies outside the cycle.
struct Blossom {
  std::vector<VertexId> vertices;  // canonical rotation, same layout as AlternatingCycle
  std::vector<EdgeId> cycle;
  VertexId root = kNoVertex;
  EdgeId stem = kNoEdge;

  bool operator==(const Blossom&) const = default;
};

/// All blossoms with stem f, deduplicated and sorted by (root, cycle).
/// Exhaustive search; throws CapExceeded past `cap` blossoms.
std::vector<Blossom> blossoms_with_stem(const Graph& g, const Matching& m, EdgeId f, std::size_t cap);

/// e -> f whenever the matching edge e lies on some blossom with stem f.
/// The universe is the edge id range of g.
Relation stem_relation(const Graph& g, const Matching& m);

}  // namespace upmnet
