#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "upmnet/bridge_oracle.hpp"
#include "upmnet/derivation.hpp"
#include "upmnet/proof_structure.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/upm_derivation.hpp"

namespace upmnet {

struct SequentializationResult {
  std::optional<Derivation> derivation;
  std::optional<SwitchingCycle> witness;  // set when the structure is incorrect

  bool correct() const { return derivation.has_value(); }
};

/// Bridge-driven sequentialization on the graphification. The matching
/// bridge with the smallest link id is split first; disconnected pieces
/// become Mix rules.
SequentializationResult mix_sequentialize(const ProofStructure& ps);
SequentializationResult mix_sequentialize(const ProofStructure& ps, BridgeOracle& oracle);

/// Derivation of ps to the matching derivation of graphification(ps), rule
/// for rule: ax, par and tensor become Joins with zero, one and two
/// non-empty sides, Mix becomes Union. Throws InvalidDerivation.
UpmDerivation derivation_to_upm(const ProofStructure& ps, const Derivation& d);
/// Inverse of the above. Throws InvalidDerivation.
Derivation upm_to_derivation(const ProofStructure& ps, const UpmDerivation& u);

/// Every derivation whose Mix rules only separate connected components,
/// each group of components combined as a left comb ordered by smallest
/// link. Rules at a node are tried by ascending link id. Throws CapExceeded.
std::vector<Derivation> enumerate_sequentializations(const ProofStructure& ps, std::size_t cap);

}  // namespace upmnet
