#pragma once

#include <string>

#include "upmnet/graph.hpp"
#include "upmnet/kingdom.hpp"
#include "upmnet/proof_structure.hpp"

namespace upmnet {

/// Links drawn top to bottom, labelled ax / ⊗ / ⅋; premise order as tail
/// labels 1 and 2.
std::string to_dot(const ProofStructure& ps);

/// Matching edges bold.
std::string to_dot(const Graph& g, const Matching& m);
std::string to_dot(const Graph& g);

/// Hasse diagram of the order: covering pairs only, greater links below.
std::string hasse_dot(const ProofStructure& ps, const KingdomOrder& k);

}  // namespace upmnet
