#pragma once

#include <json.hpp>

#include "upmnet/derivation.hpp"
#include "upmnet/graph.hpp"
#include "upmnet/kingdom.hpp"
#include "upmnet/proof_structure.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/transitions.hpp"
#include "upmnet/upm_derivation.hpp"

namespace upmnet {

using Json = nlohmann::json;

// Every reader throws InvalidInput on malformed documents.

/// {"vertices": n, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j, bool allow_parallel = false);

/// The graph document plus "matching": [edge index, ...].
Json to_json(const Graph& g, const Matching& m);
Matching matching_from_json(const Json& j, const Graph& g);

/// {"links": [{"id": k, "kind": "ax" | "tensor" | "par"}], "edges": [[src, tgt], ...]}
Json to_json(const ProofStructure& ps);
RawProofStructure raw_from_json(const Json& j);
ProofStructure net_from_json(const Json& j);

/// {"root": r, "nodes": [{"kind": "ax" | "tensor" | "par" | "mix", "link": l, "left": i, "right": j}]}
Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

/// {"root": r, "nodes": [{"kind": "empty" | "union" | "join", "bridge": e, "attach_left": [...], ...}]}
Json to_json(const UpmDerivation& d);
UpmDerivation upm_derivation_from_json(const Json& j);

/// "transitions": per vertex, a list of allowed [e, f] pairs.
Json to_json(const TransitionSystem& t);
TransitionSystem transitions_from_json(const Json& j, const Graph& g);

/// "pairs": [[e, f], ...] over a multigraph document.
PairedGraph paired_graph_from_json(const Json& j);

Json to_json(const AlternatingCycle& c);
Json to_json(const SwitchingCycle& c);
SwitchingCycle switching_cycle_from_json(const Json& j);
Json to_json(const ClosedTrail& t);
ClosedTrail trail_from_json(const Json& j);
/// [[a, b], ...]
Json to_json(const Relation& r);
Relation relation_from_json(const Json& j, int universe);

}  // namespace upmnet
