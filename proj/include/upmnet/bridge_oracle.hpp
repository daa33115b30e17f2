#pragma once

#include <vector>

#include "upmnet/graph.hpp"

namespace upmnet {

/// Bridge queries over a shrinking working copy of a graph. Sequentialization
/// only talks to this interface, so a dynamic bridge structure can replace the
/// recomputing one without touching the algorithm.
class BridgeOracle {
 public:
  virtual ~BridgeOracle() = default;

  virtual const Graph& graph() const = 0;
  virtual const EdgeMask& present() const = 0;
  virtual void erase(EdgeId e) = 0;
  /// Sorted bridges of the component of `root` in the working graph.
  virtual std::vector<EdgeId> component_bridges(VertexId root) = 0;
};

/// Runs a fresh low-link pass over the queried component on every call.
class RecomputingBridgeOracle final : public BridgeOracle {
 public:
  explicit RecomputingBridgeOracle(const Graph& g) : g_(g), present_(EdgeMask::all(g)) {}

  const Graph& graph() const override { return g_; }
  const EdgeMask& present() const override { return present_; }
  void erase(EdgeId e) override { present_.set(e, false); }
  std::vector<EdgeId> component_bridges(VertexId root) override {
    return bridges_in_component(g_, present_, root);
  }

 private:
  const Graph& g_;
  EdgeMask present_;
};

}  // namespace upmnet
