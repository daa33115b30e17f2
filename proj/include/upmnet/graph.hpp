#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace upmnet {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Undirected graph with dense vertex and edge ids. Edge ids follow insertion
/// order. Self-loops are always rejected; parallel edges only in multigraph
/// mode (correctness graphs need them, the matching side never does).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, bool allow_parallel = false);

  static Graph multigraph(int vertex_count) { return Graph(vertex_count, true); }

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool allows_parallel() const { return allow_parallel_; }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  /// Smallest edge id joining u and v, if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

 private:
  static std::uint64_t key(VertexId u, VertexId v);

  bool allow_parallel_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> first_edge_;
};

/// Edge presence flags indexed by edge id; a working copy of a graph is a
/// Graph plus one of these.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(int edge_count, bool present = true)
      : bits_(static_cast<std::size_t>(edge_count), present ? 1 : 0) {}

  static EdgeMask all(const class Graph& g) { return EdgeMask(g.edge_count(), true); }

  bool operator[](EdgeId e) const { return bits_[static_cast<std::size_t>(e)] != 0; }
  void set(EdgeId e, bool present) { bits_[static_cast<std::size_t>(e)] = present ? 1 : 0; }
  int size() const { return static_cast<int>(bits_.size()); }
  int count() const;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Components {
  std::vector<int> label;  // per vertex; numbered by smallest member vertex
  int count = 0;

  std::vector<int> sizes() const;
  std::vector<std::vector<VertexId>> members() const;
};

Components connected_components(const Graph& g);
Components connected_components(const Graph& g, const EdgeMask& present);

/// Sorted ids of the edges whose removal increases the component count.
std::vector<EdgeId> bridges(const Graph& g);
std::vector<EdgeId> bridges(const Graph& g, const EdgeMask& present);
/// Bridges of the component containing `root` only.
std::vector<EdgeId> bridges_in_component(const Graph& g, const EdgeMask& present, VertexId root);

/// A set of pairwise disjoint edges, with per-vertex lookups.
class Matching {
 public:
  Matching() = default;
  /// Throws InvalidInput when two edges share a vertex or an id is out of range.
  Matching(const Graph& g, std::vector<EdgeId> edges);

  static Matching from_mates(const Graph& g, const std::vector<VertexId>& mate);

  std::span<const EdgeId> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return static_cast<int>(mate_.size()); }

  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < member_.size() &&
           member_[static_cast<std::size_t>(e)] != 0;
  }
  EdgeId edge_at(VertexId v) const { return at_vertex_[static_cast<std::size_t>(v)]; }
  VertexId mate(VertexId v) const { return mate_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexId>& mates() const { return mate_; }

  bool is_perfect() const;
  std::vector<VertexId> unmatched() const;

  bool operator==(const Matching& other) const { return edges_ == other.edges_; }

 private:
  std::vector<EdgeId> edges_;  // ascending
  std::vector<EdgeId> at_vertex_;
  std::vector<VertexId> mate_;
  std::vector<std::uint8_t> member_;
};

/// A cycle stored as parallel sequences: edges[i] joins vertices[i] and
/// vertices[(i + 1) % k].
struct AlternatingCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const AlternatingCycle&) const = default;
};

/// A path with vertices.size() == edges.size() + 1.
struct AlternatingPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool operator==(const AlternatingPath&) const = default;
};

struct BergeDecomposition {
  std::vector<AlternatingCycle> cycles;
  std::vector<AlternatingPath> paths;

  bool empty() const { return cycles.empty() && paths.empty(); }
};

/// Rotates to the smallest edge id and orients towards the smaller of its two
/// neighbouring edges.
AlternatingCycle canonical_cycle(const Graph& g, std::vector<EdgeId> cyclic_edges);

/// Builds a cycle from a closed vertex walk v0 v1 ... v(k-1) (v0 not repeated).
AlternatingCycle cycle_from_vertices(const Graph& g, const std::vector<VertexId>& walk);

bool is_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycle& c);
bool is_alternating_path(const Graph& g, const Matching& m, const AlternatingPath& p);

/// Splits m1 Δ m2 into vertex-disjoint cycles and paths. Components are listed
/// cycles first (by smallest edge id), then paths oriented from their smaller
/// endpoint.
BergeDecomposition symmetric_difference_decompose(const Graph& g, const Matching& m1,
                                                  const Matching& m2);

/// All perfect matchings in canonical order (lowest unmatched vertex first,
/// its edges by ascending id). Exponential; meant for graphs of about twenty
/// vertices. Throws CapExceeded when more than `cap` exist.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::size_t cap);

}  // namespace upmnet
