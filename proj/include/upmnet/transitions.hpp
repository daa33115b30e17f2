#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "upmnet/graph.hpp"

namespace upmnet {

struct PairedGraph;

/// Allowed transitions per vertex: unordered pairs (e, f), e < f, of edges
/// incident to that vertex.
class TransitionSystem {
 public:
  using Pair = std::pair<EdgeId, EdgeId>;

  TransitionSystem() = default;
  /// Throws InvalidInput when a pair is not incident to its vertex.
  TransitionSystem(const Graph& g, std::vector<std::vector<Pair>> allowed);

  static TransitionSystem complete(const Graph& g);
  static TransitionSystem none(const Graph& g);

  int vertex_count() const { return static_cast<int>(allowed_.size()); }
  const std::vector<Pair>& allowed(VertexId v) const { return allowed_[static_cast<std::size_t>(v)]; }
  bool allows(VertexId v, EdgeId e, EdgeId f) const;

  bool operator==(const TransitionSystem&) const = default;

 private:
  std::vector<std::vector<Pair>> allowed_;  // sorted per vertex
};

/// Everything allowed except the paired transitions.
TransitionSystem pairs_to_transitions(const PairedGraph& pg);

/// edges[i] runs from vertices[i] to vertices[(i + 1) % k]; vertices may
/// repeat, edges may not.
struct ClosedTrail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const ClosedTrail&) const = default;
};

/// Rotation to the smallest edge, oriented towards the smaller of its two
/// neighbouring edges (ties broken by the vertex sequence).
ClosedTrail canonical_trail(const Graph& g, const ClosedTrail& t);

bool is_compatible_closed_trail(const Graph& g, const TransitionSystem& t, const ClosedTrail& trail);

/// Uniqueness test on the PM-line graph; an alternating cycle maps back to a
/// compatible closed trail.
std::optional<ClosedTrail> find_compatible_closed_trail(const Graph& g, const TransitionSystem& t);

/// Exhaustive listing of compatible closed trails, canonicalized and sorted.
/// Throws CapExceeded.
std::vector<ClosedTrail> brute_force_closed_trails(const Graph& g, const TransitionSystem& t,
                                                   std::size_t cap);

/// The subset of those trails that repeat no vertex.
std::vector<ClosedTrail> brute_force_compatible_cycles(const Graph& g, const TransitionSystem& t,
                                                       std::size_t cap);

}  // namespace upmnet
