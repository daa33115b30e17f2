#include "upmnet/sequentialization.hpp"

#include <algorithm>
#include <string>

#include "upmnet/error.hpp"
#include "upmnet/translations.hpp"

namespace upmnet {

namespace {

using Rule = DerivationNode::Rule;

// Sorted, deduplicated graphification neighbours of the premise sources.
std::vector<VertexId> attach_of(const ProofStructure& ps, std::span<const int> premises) {
  std::vector<VertexId> out;
  for (int e : premises) {
    const LinkId s = ps.edge(e).source;
    out.push_back(graph_a(s));
    out.push_back(graph_b(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int to_upm(const ProofStructure& ps, const Derivation& d, int i, UpmDerivation& u) {
  const DerivationNode& n = d.at(i);
  UpmNode j;
  if (n.rule == Rule::Mix) {
    j.kind = UpmNode::Kind::Union;
    j.left = to_upm(ps, d, n.left, u);
    j.right = to_upm(ps, d, n.right, u);
    return u.add(std::move(j));
  }
  j.kind = UpmNode::Kind::Join;
  j.bridge = n.link;
  auto in = ps.in_edges(n.link);
  switch (n.rule) {
    case Rule::Ax:
      j.left = u.add({});
      j.right = u.add({});
      break;
    case Rule::Par:
      j.attach_left = attach_of(ps, in);
      j.left = to_upm(ps, d, n.left, u);
      j.right = u.add({});
      break;
    case Rule::Tensor:
      j.attach_left = attach_of(ps, in.subspan(0, 1));
      j.attach_right = attach_of(ps, in.subspan(1, 1));
      j.left = to_upm(ps, d, n.left, u);
      j.right = to_upm(ps, d, n.right, u);
      break;
    case Rule::Mix:
      break;
  }
  return u.add(std::move(j));
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidDerivation, why); }

int from_upm(const ProofStructure& ps, const UpmDerivation& u, int i, Derivation& d) {
  const UpmNode& n = u.at(i);
  auto empty = [&](int c) { return u.at(c).kind == UpmNode::Kind::Empty; };
  switch (n.kind) {
    case UpmNode::Kind::Empty:
      invalid("empty piece where a rule was expected");
    case UpmNode::Kind::Union: {
      DerivationNode m{Rule::Mix, -1, from_upm(ps, u, n.left, d), from_upm(ps, u, n.right, d)};
      return d.add(m);
    }
    case UpmNode::Kind::Join:
      break;
  }
  const LinkId l = n.bridge;
  if (l < 0 || l >= ps.link_count()) invalid("bridge " + std::to_string(l) + " is not a link");
  switch (ps.kind(l)) {
    case LinkKind::Ax:
      if (!empty(n.left) || !empty(n.right)) invalid("ax link " + std::to_string(l) + " with premises");
      return d.add({Rule::Ax, l, -1, -1});
    case LinkKind::Par:
      if (empty(n.left) || !empty(n.right)) invalid("par link " + std::to_string(l) + " needs one left premise");
      return d.add({Rule::Par, l, from_upm(ps, u, n.left, d), -1});
    case LinkKind::Tensor:
      if (empty(n.left) || empty(n.right)) invalid("tensor link " + std::to_string(l) + " needs two premises");
      {
        const int a = from_upm(ps, u, n.left, d);
        const int b = from_upm(ps, u, n.right, d);
        return d.add({Rule::Tensor, l, a, b});
      }
  }
  invalid("unknown link kind");
}

SequentializationResult sequentialize_over(const ProofStructure& ps, const MatchedGraph& gf, BridgeOracle& oracle) {
  const UpmSequentialization s = upm_sequentialize(gf.graph, gf.matching, oracle);
  SequentializationResult out;
  if (s.unique()) {
    out.derivation = upm_to_derivation(ps, *s.derivation);
  } else {
    out.witness = alternating_to_switching(ps, gf, *s.witness);
  }
  return out;
}

}  // namespace

SequentializationResult mix_sequentialize(const ProofStructure& ps) {
  const MatchedGraph gf = graphification(ps);
  RecomputingBridgeOracle oracle(gf.graph);
  return sequentialize_over(ps, gf, oracle);
}

SequentializationResult mix_sequentialize(const ProofStructure& ps, BridgeOracle& oracle) {
  const MatchedGraph gf = graphification(ps);
  if (oracle.graph().vertex_count() != gf.graph.vertex_count() ||
      oracle.graph().edge_count() != gf.graph.edge_count()) {
    throw Error(ErrorCode::InvalidInput, "bridge oracle is not over the graphification");
  }
  return sequentialize_over(ps, gf, oracle);
}

UpmDerivation derivation_to_upm(const ProofStructure& ps, const Derivation& d) {
  if (!validate_derivation(ps, d)) invalid("derivation does not rebuild the structure");
  UpmDerivation u;
  u.root = to_upm(ps, d, d.root, u);
  return u;
}

Derivation upm_to_derivation(const ProofStructure& ps, const UpmDerivation& u) {
  const MatchedGraph gf = graphification(ps);
  if (!replays_to(u, gf.graph, gf.matching)) invalid("matching derivation does not rebuild the graphification");
  Derivation d;
  d.root = from_upm(ps, u, u.root, d);
  if (!validate_derivation(ps, d)) invalid("matching derivation breaks premise order");
  return d;
}

}  // namespace upmnet
