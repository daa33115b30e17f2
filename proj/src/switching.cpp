#include "upmnet/switching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "upmnet/error.hpp"
#include "upmnet/translations.hpp"

namespace upmnet {

PairedGraph PairedGraph::make(Graph g, std::vector<std::pair<EdgeId, EdgeId>> pairs,
                              std::vector<VertexId> pair_vertex) {
  const bool inferred = pair_vertex.empty();
  if (!inferred && pair_vertex.size() != pairs.size()) {
    throw Error(ErrorCode::InvalidInput, "one meeting vertex per pair expected");
  }
  PairedGraph pg{std::move(g), std::move(pairs), std::move(pair_vertex), {}};
  pg.pair_of_edge.assign(static_cast<std::size_t>(pg.graph.edge_count()), -1);
  for (std::size_t i = 0; i < pg.pairs.size(); ++i) {
    auto [e, f] = pg.pairs[i];
    for (EdgeId x : {e, f}) {
      if (x < 0 || x >= pg.graph.edge_count()) throw Error(ErrorCode::InvalidInput, "paired edge out of range");
      if (pg.pair_of_edge[static_cast<std::size_t>(x)] != -1) {
        throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(x) + " lies in two pairs");
      }
      pg.pair_of_edge[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    const Edge& a = pg.graph.edge(e);
    const Edge& b = pg.graph.edge(f);
    if (e == f || !(b.has(a.u) || b.has(a.v))) {
      throw Error(ErrorCode::InvalidInput, "paired edges must be distinct and share a vertex");
    }
    if (inferred) {
      if (b.has(a.u) && b.has(a.v)) {
        throw Error(ErrorCode::InvalidInput, "parallel paired edges need an explicit meeting vertex");
      }
      pg.pair_vertex.push_back(b.has(a.u) ? a.u : a.v);
    } else if (!a.has(pg.pair_vertex[i]) || !b.has(pg.pair_vertex[i])) {
      throw Error(ErrorCode::InvalidInput, "paired edges do not meet at the given vertex");
    }
  }
  return pg;
}

namespace {

template <class ArcAt>
PairedGraph build_correctness(const ProofStructure& ps, int vertices, int edges, ArcAt arc_at) {
  Graph g = Graph::multigraph(vertices);
  for (int e = 0; e < edges; ++e) {
    const Arc a = arc_at(e);
    g.add_edge(a.source, a.target);
  }
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<VertexId> meet;
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    if (ps.kind(l) != LinkKind::Par) continue;
    auto in = ps.in_edges(l);
    pairs.emplace_back(in[0], in[1]);
    meet.push_back(l);
  }
  return PairedGraph::make(std::move(g), std::move(pairs), std::move(meet));
}

}  // namespace

PairedGraph correctness_graph(const ProofStructure& ps) {
  return build_correctness(ps, ps.link_count(), ps.edge_count(), [&](int e) { return ps.edge(e); });
}

PairedGraph correctness_graph(const ConclusionNet& cn) {
  return build_correctness(cn.net, cn.vertex_count(), cn.edge_count(), [&](int e) { return cn.arc(e); });
}

Switching switching_from_bits(const PairedGraph& pg, std::uint64_t bits) {
  Switching s;
  for (std::size_t i = 0; i < pg.pairs.size(); ++i) {
    s.chosen.push_back(((bits >> i) & 1U) ? pg.pairs[i].second : pg.pairs[i].first);
  }
  return s;
}

EdgeMask switching_mask(const PairedGraph& pg, const Switching& s) {
  EdgeMask mask = EdgeMask::all(pg.graph);
  for (std::size_t i = 0; i < pg.pairs.size(); ++i) {
    auto [e, f] = pg.pairs[i];
    mask.set(s.chosen[i] == e ? f : e, false);
  }
  return mask;
}

void for_each_switching(const PairedGraph& pg, int max_pairs,
                        const std::function<bool(const Switching&, const EdgeMask&)>& visit) {
  const auto k = static_cast<int>(pg.pairs.size());
  if (k > max_pairs || k >= 63) {
    throw Error(ErrorCode::TooManyPairs,
                std::to_string(k) + " pairs exceed the enumeration bound " + std::to_string(max_pairs));
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const Switching s = switching_from_bits(pg, bits);
    if (!visit(s, switching_mask(pg, s))) return;
  }
}

std::optional<SwitchingCycle> find_cycle(const Graph& g, const EdgeMask& present) {
  std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  std::vector<std::vector<Incidence>> forest(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!present[e]) continue;
    const Edge& ed = g.edge(e);
    const VertexId ru = root(ed.u), rv = root(ed.v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      forest[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
      forest[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
      continue;
    }
    // e closes a cycle with the forest path from ed.v back to ed.u.
    std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()), kNoEdge);
    std::vector<VertexId> from(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
    std::vector<VertexId> queue{ed.v};
    from[static_cast<std::size_t>(ed.v)] = ed.v;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : forest[static_cast<std::size_t>(queue[head])]) {
        if (from[static_cast<std::size_t>(inc.neighbor)] != kNoVertex) continue;
        from[static_cast<std::size_t>(inc.neighbor)] = queue[head];
        via[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
    std::vector<EdgeId> ring{e};
    for (VertexId x = ed.u; x != ed.v; x = from[static_cast<std::size_t>(x)]) {
      ring.push_back(via[static_cast<std::size_t>(x)]);
    }
    AlternatingCycle c = canonical_cycle(g, std::move(ring));
    return SwitchingCycle{std::move(c.vertices), std::move(c.edges)};
  }
  return std::nullopt;
}

bool is_switching_cycle(const PairedGraph& pg, const SwitchingCycle& c) {
  const std::size_t k = c.edges.size();
  if (k < 2 || c.links.size() != k) return false;
  std::vector<LinkId> vs = c.links;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  std::vector<EdgeId> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  std::vector<int> used_pairs;
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= pg.graph.edge_count()) return false;
    const Edge& ed = pg.graph.edge(e);
    const VertexId a = c.links[i], b = c.links[(i + 1) % k];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
    const int p = pg.pair_of_edge[static_cast<std::size_t>(e)];
    if (p >= 0) used_pairs.push_back(p);
  }
  std::sort(used_pairs.begin(), used_pairs.end());
  return std::adjacent_find(used_pairs.begin(), used_pairs.end()) == used_pairs.end();
}

DrVerdict dr_check(const ProofStructure& ps, Mode mode, int max_pairs) {
  const PairedGraph pg = correctness_graph(ps);
  DrVerdict verdict;
  int components = 0;
  for_each_switching(pg, max_pairs, [&](const Switching&, const EdgeMask& mask) {
    if (auto cycle = find_cycle(pg.graph, mask)) {
      verdict.correct = false;
      verdict.witness = std::move(cycle);
      return false;
    }
    if (components == 0) components = connected_components(pg.graph, mask).count;
    return true;
  });
  if (verdict.correct && mode == Mode::NoMix && components != 1) {
    verdict.correct = false;
    verdict.disconnected = true;
  }
  return verdict;
}

int euler_characteristic(const ProofStructure& ps) {
  return ps.link_count() - (ps.edge_count() - ps.count(LinkKind::Par));
}

int mix_count(const ProofStructure& ps) {
  if (!is_mix_correct(ps)) throw Error(ErrorCode::NotCorrect, "proof structure has a switching cycle");
  return euler_characteristic(ps);
}

}  // namespace upmnet
