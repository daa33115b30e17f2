#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "upmnet/proof_structure.hpp"
#include "upmnet/relation.hpp"

namespace upmnet {

/// (p, q) whenever an edge p -> q exists.
Relation successor_relation(const ProofStructure& ps);

/// Whether p is a dependency of the par q: some switching path between the
/// premises of q passes through p. Throws NotAPar, NotCorrect, and
/// PreconditionViolated when p == q.
bool is_dependency(const ProofStructure& ps, LinkId p, LinkId q);

/// All pairs (p, q) with p a dependency of the par q. Throws NotCorrect.
Relation dependency_relation(const ProofStructure& ps);

/// Strict order over link ids; (p, q) in `order` reads p << q.
struct KingdomOrder {
  Relation generators;
  Relation order;

  bool precedes(LinkId p, LinkId q) const { return order.contains(p, q); }
  /// Links below no other link, ascending.
  std::vector<LinkId> maximal() const;
  std::optional<LinkId> greatest() const;

  bool operator==(const KingdomOrder& o) const { return order == o.order; }
};

/// Transitive closure of dependencies plus successors. Throws NotCorrect.
KingdomOrder kingdom_order(const ProofStructure& ps);

/// p << q iff p is introduced under the rule of q in every enumerated
/// sequentialization. Throws NotCorrect and CapExceeded.
KingdomOrder kingdom_order_bruteforce(const ProofStructure& ps, std::size_t cap);

/// Links introduced by the last rule of some enumerated sequentialization.
std::vector<LinkId> last_rule_links(const ProofStructure& ps, std::size_t cap);

/// Whether some sequentialization ends with l. Throws NotMllCorrect unless
/// ps is correct without Mix, NotMaximal unless l is maximal.
bool check_last_rule_property(const ProofStructure& ps, LinkId l, std::size_t cap);

}  // namespace upmnet
