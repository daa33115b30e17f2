#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "upmnet/bridge_oracle.hpp"
#include "upmnet/graph.hpp"

namespace upmnet {

struct UpmNode {
  enum class Kind { Empty, Union, Join };

  Kind kind = Kind::Empty;
  EdgeId bridge = kNoEdge;               // Join only
  std::vector<VertexId> attach_left;     // neighbours of bridge.u on the left side
  std::vector<VertexId> attach_right;    // neighbours of bridge.v on the right side
  int left = -1;
  int right = -1;

  bool operator==(const UpmNode&) const = default;
};

/// Tree stored as an arena indexed by int; `root` names the top node. For a
/// Join, the left child builds the side of the bridge's first endpoint.
struct UpmDerivation {
  std::vector<UpmNode> nodes;
  int root = -1;

  const UpmNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  int add(UpmNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }
  int count(UpmNode::Kind k) const;
  /// Bridges of the Joins below node i (i excluded).
  std::vector<EdgeId> bridges_below(int i) const;
};

/// Compares the trees reachable from the roots, ignoring arena layout.
bool structurally_equal(const UpmDerivation& a, const UpmDerivation& b);

struct UpmSequentialization {
  std::optional<UpmDerivation> derivation;
  std::optional<AlternatingCycle> witness;  // set when m is not unique

  bool unique() const { return derivation.has_value(); }
};

/// Splits off a matching bridge per component, smallest edge id first;
/// components of a disconnected piece are combined as a left comb of Unions
/// ordered by smallest vertex. Throws NotPerfect.
UpmSequentialization upm_sequentialize(const Graph& g, const Matching& m);
UpmSequentialization upm_sequentialize(const Graph& g, const Matching& m, BridgeOracle& oracle);

/// Every derivation with canonical Unions, branching over all matching
/// bridges of each connected piece. Throws CapExceeded.
std::vector<UpmDerivation> enumerate_upm_derivations(const Graph& g, const Matching& m,
                                                     std::size_t cap);

/// True iff replaying d rebuilds exactly (g, m).
bool replays_to(const UpmDerivation& d, const Graph& g, const Matching& m);

/// Both sides of g - e have odd order. Throws NotABridge.
bool is_matching_bridge_by_parity(const Graph& g, EdgeId e);

}  // namespace upmnet
