#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "upmnet/proof_structure.hpp"

namespace upmnet {

/// Sequent-calculus rule node. Rules reference links only; sequents are never
/// materialized. A par keeps its single premise in `left`.
struct DerivationNode {
  enum class Rule { Ax, Tensor, Par, Mix };

  Rule rule = Rule::Ax;
  LinkId link = -1;  // unused by Mix
  int left = -1;
  int right = -1;

  bool operator==(const DerivationNode&) const = default;
};

std::string to_string(DerivationNode::Rule r);

struct Derivation {
  std::vector<DerivationNode> nodes;
  int root = -1;

  const DerivationNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  int add(DerivationNode n) {
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }
  int count(DerivationNode::Rule r) const;
  /// Links introduced strictly below node i.
  std::vector<LinkId> links_below(int i) const;
};

bool structurally_equal(const Derivation& a, const Derivation& b);

/// True iff replaying the rules rebuilds ps exactly: every link introduced
/// once by a rule of its kind, a tensor's first premise coming from the left
/// subtree and its second from the right one, a par's premises from its
/// single subtree. Mix bracketing is free.
bool validate_derivation(const ProofStructure& ps, const Derivation& d);

/// Indented rule tree, conclusion rule first.
std::string pretty_print(const ProofStructure& ps, const Derivation& d);

}  // namespace upmnet
