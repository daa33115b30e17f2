#pragma once

#include <optional>

#include "upmnet/graph.hpp"

namespace upmnet {

/// Maximum-cardinality matching (Edmonds). Vertices are processed in
/// ascending order, so the result is deterministic.
Matching maximum_matching(const Graph& g);
Matching maximum_matching(const Graph& g, const EdgeMask& present);

bool has_perfect_matching(const Graph& g);

struct UniquenessVerdict {
  bool unique = true;
  std::optional<AlternatingCycle> witness;
};

/// For each e in m (ascending id), tests whether G - e still has a perfect
/// matching; the first hit gives the witness cycle. Throws NotPerfect.
UniquenessVerdict is_unique_pm(const Graph& g, const Matching& m);

/// Same, restricted to the edges in `present`. Matching edges outside the
/// mask are ignored together with their endpoints, which must have no other
/// present edge.
UniquenessVerdict is_unique_pm(const Graph& g, const EdgeMask& present, const Matching& m);

/// Alternating path from u to v crossing the matching edge e, built from two
/// successive augmenting searches in G - e. Requires u, v to be the only
/// unmatched vertices and e in m (PreconditionViolated otherwise). Also
/// throws PreconditionViolated when the search exposes an alternating cycle
/// through e.
std::optional<AlternatingPath> find_alternating_path_through(const Graph& g, const Matching& m,
                                                             VertexId u, VertexId v, EdgeId e);

}  // namespace upmnet
