#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "upmnet/graph.hpp"
#include "upmnet/proof_structure.hpp"

namespace upmnet {

/// Undirected multigraph with disjoint pairs of edges sharing a vertex.
struct PairedGraph {
  Graph graph;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<VertexId> pair_vertex;  // where the two edges of a pair meet
  std::vector<int> pair_of_edge;      // -1 when unpaired

  /// Throws InvalidInput when a pair is not adjacent or pairs overlap. The
  /// meeting vertex is inferred unless given; parallel pairs need it given.
  static PairedGraph make(Graph g, std::vector<std::pair<EdgeId, EdgeId>> pairs,
                          std::vector<VertexId> pair_vertex = {});
};

/// Vertices are links, edge ids are proof-structure edge ids; the two
/// premises of every par form a pair (pairs listed by par id).
PairedGraph correctness_graph(const ProofStructure& ps);
/// Same, with conclusion vertices and edges appended.
PairedGraph correctness_graph(const ConclusionNet& cn);

/// One chosen edge per pair, in pair order.
struct Switching {
  std::vector<EdgeId> chosen;
};

inline constexpr int kDefaultPairBound = 20;

/// Bit i of `bits` selects the second edge of pair i.
Switching switching_from_bits(const PairedGraph& pg, std::uint64_t bits);
EdgeMask switching_mask(const PairedGraph& pg, const Switching& s);

/// Visits all 2^|pairs| switching graphs until `visit` returns false.
/// Throws TooManyPairs past `max_pairs`.
void for_each_switching(const PairedGraph& pg, int max_pairs,
                        const std::function<bool(const Switching&, const EdgeMask&)>& visit);

/// links[i] and links[(i + 1) % k] are the endpoints of edges[i].
struct SwitchingCycle {
  std::vector<LinkId> links;
  std::vector<EdgeId> edges;

  bool operator==(const SwitchingCycle&) const = default;
};

/// First cycle closed when adding present edges in id order, rotated to its
/// smallest edge.
std::optional<SwitchingCycle> find_cycle(const Graph& g, const EdgeMask& present);

/// Simple cycle of pg.graph meeting every pair at most once.
bool is_switching_cycle(const PairedGraph& pg, const SwitchingCycle& c);

enum class Mode { Mix, NoMix };

struct DrVerdict {
  bool correct = true;
  std::optional<SwitchingCycle> witness;
  bool disconnected = false;  // NoMix failure without any cycle
};

/// Brute-force Danos-Regnier check over every switching graph.
DrVerdict dr_check(const ProofStructure& ps, Mode mode, int max_pairs = kDefaultPairBound);

/// links - (edges - pars); the component count of any acyclic switching graph.
int euler_characteristic(const ProofStructure& ps);

/// Component count shared by all switching graphs of a correct structure;
/// 1 exactly for MLL-correct ones. Throws NotCorrect.
int mix_count(const ProofStructure& ps);

}  // namespace upmnet
