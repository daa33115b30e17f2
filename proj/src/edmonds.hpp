#pragma once

#include <optional>
#include <vector>

#include "upmnet/graph.hpp"

namespace upmnet::detail {

/// Single-root augmenting-path search with blossom shrinking through a
/// disjoint-set forest. Reusable across roots on the same graph; each search
/// costs O(m α(n)).
class AugmentingSearch {
 public:
  AugmentingSearch(const Graph& g, const EdgeMask* present);

  /// Vertex sequence [free end, ..., root] of an augmenting path for `mate`
  /// starting at the unmatched vertex `root`, or nullopt.
  std::optional<std::vector<VertexId>> find_from(VertexId root, const std::vector<VertexId>& mate);

 private:
  int find(int x);
  int lca(int x, int y);
  void shrink(int x, int y, int base);

  const Graph& g_;
  const EdgeMask* present_;
  // Internal arrays are 1-based; slot 0 stands for "none".
  std::vector<int> match_, pre_, fa_, label_, stamp_, queue_;
  int clock_ = 0;
};

/// Flips matched/unmatched along an augmenting path given as vertices.
void augment(std::vector<VertexId>& mate, const std::vector<VertexId>& path);

/// Edge ids along a vertex path; the graph must be simple.
std::vector<EdgeId> path_edges(const Graph& g, const std::vector<VertexId>& path);

}  // namespace upmnet::detail
