#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace upmnet {

enum class LinkKind { Ax, Tensor, Par };

std::string_view to_string(LinkKind k) noexcept;

using LinkId = std::int32_t;

struct Arc {
  LinkId source = -1;
  LinkId target = -1;

  bool operator==(const Arc&) const = default;
};

/// Unchecked input: link kinds by id plus directed edges. The order of the
/// two edges entering a binary link is its premise order.
struct RawProofStructure {
  std::vector<LinkKind> links;
  std::vector<Arc> edges;

  bool operator==(const RawProofStructure&) const = default;
};

struct Violation {
  enum class Kind { Empty, Cyclic, Degree, BadEndpoint };

  Kind kind = Kind::Empty;
  LinkId link = -1;
  std::string clause;
  int expected = 0;
  int actual = 0;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Validated directed acyclic multigraph of ax / tensor / par links.
class ProofStructure {
 public:
  static ValidationReport validate(const RawProofStructure& raw);
  /// Throws InvalidInput carrying the first violation.
  explicit ProofStructure(RawProofStructure raw);

  int link_count() const { return static_cast<int>(raw_.links.size()); }
  int edge_count() const { return static_cast<int>(raw_.edges.size()); }
  LinkKind kind(LinkId l) const { return raw_.links[static_cast<std::size_t>(l)]; }
  const Arc& edge(int e) const { return raw_.edges[static_cast<std::size_t>(e)]; }
  std::span<const Arc> edges() const { return raw_.edges; }
  const RawProofStructure& raw() const { return raw_; }

  /// Edge ids entering l, in premise order.
  std::span<const int> in_edges(LinkId l) const { return in_[static_cast<std::size_t>(l)]; }
  std::span<const int> out_edges(LinkId l) const { return out_[static_cast<std::size_t>(l)]; }
  std::vector<LinkId> predecessors(LinkId l) const;
  std::vector<LinkId> successors(LinkId l) const;
  bool is_terminal(LinkId l) const { return out_edges(l).empty(); }
  std::vector<LinkId> terminal_links() const;
  /// Outgoing edges still missing to reach the exact degree (2 for ax, 1 otherwise).
  int missing_conclusions(LinkId l) const;
  int count(LinkKind k) const;

  /// Copy with one link relabelled; only tensor <-> par keeps it valid.
  ProofStructure with_kind(LinkId l, LinkKind k) const;

  bool operator==(const ProofStructure& o) const { return raw_ == o.raw_; }

 private:
  RawProofStructure raw_;
  std::vector<std::vector<int>> in_, out_;
};

/// A proof structure completed with its conclusion vertices. Conclusion i is
/// vertex link_count() + i, reached by edge edge_count() + i; conclusions are
/// listed by source link, two in a row for an ax without successors.
struct ConclusionNet {
  ProofStructure net;
  std::vector<LinkId> conclusion_source;

  int conclusion_count() const { return static_cast<int>(conclusion_source.size()); }
  int vertex_count() const { return net.link_count() + conclusion_count(); }
  int edge_count() const { return net.edge_count() + conclusion_count(); }
  /// Edges of the completed graph, conclusion edges last.
  Arc arc(int e) const;
  bool is_conclusion(int vertex) const { return vertex >= net.link_count(); }
};

ConclusionNet add_conclusions(const ProofStructure& ps);
ProofStructure strip_conclusions(const ConclusionNet& cn);

}  // namespace upmnet
