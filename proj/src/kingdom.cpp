#include "upmnet/kingdom.hpp"

#include <algorithm>
#include <string>

#include "upmnet/error.hpp"
#include "upmnet/matching.hpp"
#include "upmnet/sequentialization.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/translations.hpp"

namespace upmnet {

namespace {

void require_link(const ProofStructure& ps, LinkId l) {
  if (l < 0 || l >= ps.link_count()) throw Error(ErrorCode::InvalidInput, "link " + std::to_string(l) + " out of range");
}

void require_correct(const ProofStructure& ps) {
  if (!is_mix_correct(ps)) throw Error(ErrorCode::NotCorrect, "structure is not a proof net");
}

// Assumes ps correct, q a par and p != q.
bool depends(const ProofStructure& ps, LinkId p, LinkId q) {
  const auto preds = ps.predecessors(q);
  if (std::find(preds.begin(), preds.end(), p) != preds.end()) {
    return !is_mix_correct(ps.with_kind(q, LinkKind::Tensor));
  }
  // As a tensor, q's premises land on distinct vertices a_q and b_q; with its
  // matching edge gone, they are the only unmatched vertices.
  const MatchedGraph gf = graphification(ps.with_kind(q, LinkKind::Tensor));
  Graph g(gf.graph.vertex_count());
  std::vector<EdgeId> matched;
  for (EdgeId e = 0; e < gf.graph.edge_count(); ++e) {
    if (e == q) continue;
    const EdgeId id = g.add_edge(gf.graph.edge(e).u, gf.graph.edge(e).v);
    if (gf.matching.contains(e)) matched.push_back(id);
  }
  const Matching m(g, std::move(matched));
  const EdgeId through = p < q ? p : p - 1;
  return find_alternating_path_through(g, m, graph_a(q), graph_b(q), through).has_value();
}

KingdomOrder close(Relation generators) {
  KingdomOrder k;
  k.order = generators.transitive_closure();
  k.generators = std::move(generators);
  return k;
}

}  // namespace

Relation successor_relation(const ProofStructure& ps) {
  Relation r(ps.link_count());
  for (const Arc& a : ps.edges()) r.insert(a.source, a.target);
  return r;
}

bool is_dependency(const ProofStructure& ps, LinkId p, LinkId q) {
  require_link(ps, p);
  require_link(ps, q);
  if (ps.kind(q) != LinkKind::Par) throw Error(ErrorCode::NotAPar, "link " + std::to_string(q) + " is not a par");
  if (p == q) throw Error(ErrorCode::PreconditionViolated, "a link is not its own dependency");
  require_correct(ps);
  return depends(ps, p, q);
}

Relation dependency_relation(const ProofStructure& ps) {
  require_correct(ps);
  Relation r(ps.link_count());
  for (LinkId q = 0; q < ps.link_count(); ++q) {
    if (ps.kind(q) != LinkKind::Par) continue;
    for (LinkId p = 0; p < ps.link_count(); ++p) {
      if (p != q && depends(ps, p, q)) r.insert(p, q);
    }
  }
  return r;
}

std::vector<LinkId> KingdomOrder::maximal() const {
  std::vector<LinkId> out;
  std::vector<std::uint8_t> below(static_cast<std::size_t>(order.universe()), 0);
  for (auto [p, q] : order.pairs()) below[static_cast<std::size_t>(p)] = 1;
  for (LinkId l = 0; l < order.universe(); ++l) {
    if (!below[static_cast<std::size_t>(l)]) out.push_back(l);
  }
  return out;
}

std::optional<LinkId> KingdomOrder::greatest() const {
  const auto top = maximal();
  if (top.size() != 1) return std::nullopt;
  for (LinkId l = 0; l < order.universe(); ++l) {
    if (l != top[0] && !precedes(l, top[0])) return std::nullopt;
  }
  return top[0];
}

KingdomOrder kingdom_order(const ProofStructure& ps) {
  return close(dependency_relation(ps).united(successor_relation(ps)));
}

KingdomOrder kingdom_order_bruteforce(const ProofStructure& ps, std::size_t cap) {
  const auto all = enumerate_sequentializations(ps, cap);
  if (all.empty()) throw Error(ErrorCode::NotCorrect, "structure has no sequentialization");
  const int n = ps.link_count();
  std::vector<std::uint8_t> always(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1);
  std::vector<std::uint8_t> now(always.size());
  for (const Derivation& d : all) {
    std::fill(now.begin(), now.end(), 0);
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
      const DerivationNode& node = d.at(i);
      if (node.rule == DerivationNode::Rule::Mix) continue;
      for (LinkId p : d.links_below(i)) {
        now[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(node.link)] = 1;
      }
    }
    for (std::size_t i = 0; i < always.size(); ++i) always[i] = always[i] && now[i];
  }
  Relation r(n);
  for (LinkId p = 0; p < n; ++p) {
    for (LinkId q = 0; q < n; ++q) {
      if (always[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)]) r.insert(p, q);
    }
  }
  // Already transitive: "below q's rule" composes along every derivation.
  KingdomOrder k;
  k.generators = r;
  k.order = std::move(r);
  return k;
}

std::vector<LinkId> last_rule_links(const ProofStructure& ps, std::size_t cap) {
  std::vector<LinkId> out;
  for (const Derivation& d : enumerate_sequentializations(ps, cap)) {
    const DerivationNode& top = d.at(d.root);
    if (top.rule != DerivationNode::Rule::Mix) out.push_back(top.link);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_last_rule_property(const ProofStructure& ps, LinkId l, std::size_t cap) {
  require_link(ps, l);
  if (!is_mix_correct(ps) || euler_characteristic(ps) != 1) throw Error(ErrorCode::NotMllCorrect, "structure is not correct without Mix");
  const auto top = kingdom_order(ps).maximal();
  if (!std::binary_search(top.begin(), top.end(), l)) {
    throw Error(ErrorCode::NotMaximal, "link " + std::to_string(l) + " is not maximal");
  }
  const auto roots = last_rule_links(ps, cap);
  return std::binary_search(roots.begin(), roots.end(), l);
}

}  // namespace upmnet
