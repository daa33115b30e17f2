#include "upmnet/proof_structure.hpp"

#include <algorithm>

#include "upmnet/error.hpp"

namespace upmnet {

std::string_view to_string(LinkKind k) noexcept {
  switch (k) {
    case LinkKind::Ax: return "ax";
    case LinkKind::Tensor: return "tensor";
    case LinkKind::Par: return "par";
  }
  return "?";
}

std::string Violation::message() const {
  switch (kind) {
    case Kind::Empty: return "proof structure has no links";
    case Kind::Cyclic: return "directed cycle through link " + std::to_string(link);
    case Kind::BadEndpoint: return "edge endpoint " + std::to_string(link) + " is not a link";
    case Kind::Degree:
      return "link " + std::to_string(link) + " violates '" + clause + "': expected " +
             std::to_string(expected) + ", got " + std::to_string(actual);
  }
  return "invalid proof structure";
}

ValidationReport ProofStructure::validate(const RawProofStructure& raw) {
  ValidationReport report;
  const int n = static_cast<int>(raw.links.size());
  if (n == 0) {
    report.violations.push_back({Violation::Kind::Empty, -1, "non-empty", 1, 0});
    return report;
  }
  std::vector<int> indeg(static_cast<std::size_t>(n), 0), outdeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<LinkId>> next(static_cast<std::size_t>(n));
  bool endpoints_ok = true;
  for (const Arc& a : raw.edges) {
    for (LinkId x : {a.source, a.target}) {
      if (x < 0 || x >= n) {
        report.violations.push_back({Violation::Kind::BadEndpoint, x, "endpoint", 0, 0});
        endpoints_ok = false;
      }
    }
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) continue;
    ++outdeg[static_cast<std::size_t>(a.source)];
    ++indeg[static_cast<std::size_t>(a.target)];
    next[static_cast<std::size_t>(a.source)].push_back(a.target);
  }
  for (LinkId l = 0; l < n; ++l) {
    const auto s = static_cast<std::size_t>(l);
    if (raw.links[s] == LinkKind::Ax) {
      if (indeg[s] != 0) report.violations.push_back({Violation::Kind::Degree, l, "ax indegree = 0", 0, indeg[s]});
      if (outdeg[s] > 2) report.violations.push_back({Violation::Kind::Degree, l, "ax outdegree <= 2", 2, outdeg[s]});
    } else {
      const std::string name(to_string(raw.links[s]));
      if (indeg[s] != 2) report.violations.push_back({Violation::Kind::Degree, l, name + " indegree = 2", 2, indeg[s]});
      if (outdeg[s] > 1) report.violations.push_back({Violation::Kind::Degree, l, name + " outdegree <= 1", 1, outdeg[s]});
    }
  }
  if (!endpoints_ok) return report;
  // Kahn's algorithm; whatever is left over sits on or behind a cycle.
  std::vector<int> pending = indeg;
  std::vector<LinkId> ready;
  for (LinkId l = 0; l < n; ++l) {
    if (pending[static_cast<std::size_t>(l)] == 0) ready.push_back(l);
  }
  int seen = 0;
  while (!ready.empty()) {
    const LinkId l = ready.back();
    ready.pop_back();
    ++seen;
    for (LinkId t : next[static_cast<std::size_t>(l)]) {
      if (--pending[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
    }
  }
  if (seen != n) {
    for (LinkId l = 0; l < n; ++l) {
      if (pending[static_cast<std::size_t>(l)] > 0) {
        report.violations.push_back({Violation::Kind::Cyclic, l, "acyclic", 0, 0});
        break;
      }
    }
  }
  return report;
}

ProofStructure::ProofStructure(RawProofStructure raw) : raw_(std::move(raw)) {
  ValidationReport report = validate(raw_);
  if (!report.ok()) throw Error(ErrorCode::InvalidInput, report.violations.front().message());
  in_.resize(raw_.links.size());
  out_.resize(raw_.links.size());
  for (int e = 0; e < edge_count(); ++e) {
    out_[static_cast<std::size_t>(raw_.edges[static_cast<std::size_t>(e)].source)].push_back(e);
    in_[static_cast<std::size_t>(raw_.edges[static_cast<std::size_t>(e)].target)].push_back(e);
  }
}

std::vector<LinkId> ProofStructure::predecessors(LinkId l) const {
  std::vector<LinkId> out;
  for (int e : in_edges(l)) out.push_back(edge(e).source);
  return out;
}

std::vector<LinkId> ProofStructure::successors(LinkId l) const {
  std::vector<LinkId> out;
  for (int e : out_edges(l)) out.push_back(edge(e).target);
  return out;
}

std::vector<LinkId> ProofStructure::terminal_links() const {
  std::vector<LinkId> out;
  for (LinkId l = 0; l < link_count(); ++l) {
    if (is_terminal(l)) out.push_back(l);
  }
  return out;
}

int ProofStructure::missing_conclusions(LinkId l) const {
  const int full = kind(l) == LinkKind::Ax ? 2 : 1;
  return full - static_cast<int>(out_edges(l).size());
}

int ProofStructure::count(LinkKind k) const {
  return static_cast<int>(std::count(raw_.links.begin(), raw_.links.end(), k));
}

ProofStructure ProofStructure::with_kind(LinkId l, LinkKind k) const {
  RawProofStructure copy = raw_;
  copy.links.at(static_cast<std::size_t>(l)) = k;
  return ProofStructure(std::move(copy));
}

Arc ConclusionNet::arc(int e) const {
  if (e < net.edge_count()) return net.edge(e);
  const int i = e - net.edge_count();
  return {conclusion_source[static_cast<std::size_t>(i)], net.link_count() + i};
}

ConclusionNet add_conclusions(const ProofStructure& ps) {
  ConclusionNet cn{ps, {}};
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    for (int k = ps.missing_conclusions(l); k > 0; --k) cn.conclusion_source.push_back(l);
  }
  return cn;
}

ProofStructure strip_conclusions(const ConclusionNet& cn) { return cn.net; }

}  // namespace upmnet
