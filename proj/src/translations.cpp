#include "upmnet/translations.hpp"

#include <algorithm>
#include <utility>

#include "upmnet/error.hpp"
#include "upmnet/matching.hpp"

namespace upmnet {

namespace {

Matching first_edges(const Graph& g, int count) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ids[static_cast<std::size_t>(i)] = i;
  return Matching(g, std::move(ids));
}

void add_or_merge(MatchedGraph& mg, VertexId u, VertexId v, int source) {
  if (auto e = mg.graph.find_edge(u, v)) {
    mg.provenance[static_cast<std::size_t>(*e)].push_back(source);
    return;
  }
  mg.graph.add_edge(u, v);
  mg.provenance.push_back({source});
}

}  // namespace

MatchedGraph rb_graph(const ConclusionNet& cn) {
  const ProofStructure& ps = cn.net;
  const int d_count = cn.edge_count();
  MatchedGraph mg;
  mg.graph = Graph(2 * d_count);
  for (int d = 0; d < d_count; ++d) {
    mg.graph.add_edge(2 * d, 2 * d + 1);
    mg.provenance.push_back({d});
  }
  std::vector<std::vector<int>> outs(static_cast<std::size_t>(ps.link_count()));
  for (int d = 0; d < d_count; ++d) outs[static_cast<std::size_t>(cn.arc(d).source)].push_back(d);
  auto upper = [](int d) { return 2 * d; };
  auto lower = [](int d) { return 2 * d + 1; };
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    const auto& out = outs[static_cast<std::size_t>(l)];
    switch (ps.kind(l)) {
      case LinkKind::Ax:
        mg.graph.add_edge(upper(out[0]), upper(out[1]));
        mg.provenance.push_back({l});
        break;
      case LinkKind::Tensor: {
        auto in = ps.in_edges(l);
        mg.graph.add_edge(lower(in[0]), lower(in[1]));
        mg.provenance.push_back({l});
        [[fallthrough]];
      }
      case LinkKind::Par: {
        auto in = ps.in_edges(l);
        for (int p : in) {
          mg.graph.add_edge(upper(out[0]), lower(p));
          mg.provenance.push_back({l});
        }
        break;
      }
    }
  }
  mg.matching = first_edges(mg.graph, d_count);
  return mg;
}

MatchedGraph graphification(const ProofStructure& ps) {
  const int n = ps.link_count();
  MatchedGraph mg;
  mg.graph = Graph(2 * n);
  for (LinkId l = 0; l < n; ++l) {
    mg.graph.add_edge(graph_a(l), graph_b(l));
    mg.provenance.push_back({l});
  }
  for (int d = 0; d < ps.edge_count(); ++d) {
    const Arc a = ps.edge(d);
    const bool second_tensor_premise =
        ps.kind(a.target) == LinkKind::Tensor && ps.in_edges(a.target)[1] == d;
    const VertexId x = second_tensor_premise ? graph_b(a.target) : graph_a(a.target);
    add_or_merge(mg, graph_a(a.source), x, d);
    add_or_merge(mg, graph_b(a.source), x, d);
  }
  mg.matching = first_edges(mg.graph, n);
  return mg;
}

bool is_mix_correct(const ProofStructure& ps) {
  const MatchedGraph gf = graphification(ps);
  return is_unique_pm(gf.graph, gf.matching).unique;
}

Proofification proofification(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count() || !m.is_perfect()) {
    throw Error(ErrorCode::NotPerfect, "proofification needs a perfect matching");
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  RawProofStructure raw;
  Proofification out{ProofStructure(RawProofStructure{{LinkKind::Ax}, {}}), {}, {}, {}, {}, {}};
  out.link_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  out.pars_of_vertex.resize(n);
  out.leaf_ax_of_vertex.assign(n, -1);
  out.b_edge.assign(n, -1);

  auto new_link = [&](LinkKind k) {
    raw.links.push_back(k);
    return static_cast<LinkId>(raw.links.size()) - 1;
  };
  auto new_edge = [&](LinkId s, LinkId t) {
    raw.edges.push_back({s, t});
    return static_cast<int>(raw.edges.size()) - 1;
  };

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!m.contains(e)) out.link_of_edge[static_cast<std::size_t>(e)] = new_link(LinkKind::Ax);
  }
  // Source link of the edge that will become B_u.
  std::vector<LinkId> b_source(n, -1);
  std::vector<std::pair<LinkId, LinkId>> pending;  // par premises created later
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::vector<std::pair<VertexId, EdgeId>> nbrs;
    for (const Incidence& inc : g.incident(u)) {
      if (!m.contains(inc.edge)) nbrs.emplace_back(inc.neighbor, inc.edge);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (nbrs.empty()) {
      const LinkId ax = new_link(LinkKind::Ax);
      out.leaf_ax_of_vertex[static_cast<std::size_t>(u)] = ax;
      b_source[static_cast<std::size_t>(u)] = ax;
      continue;
    }
    LinkId acc = out.link_of_edge[static_cast<std::size_t>(nbrs[0].second)];
    for (std::size_t i = 1; i < nbrs.size(); ++i) {
      const LinkId par = new_link(LinkKind::Par);
      out.pars_of_vertex[static_cast<std::size_t>(u)].push_back(par);
      pending.emplace_back(acc, par);
      pending.emplace_back(out.link_of_edge[static_cast<std::size_t>(nbrs[i].second)], par);
      acc = par;
    }
    b_source[static_cast<std::size_t>(u)] = acc;
  }
  for (auto [s, t] : pending) new_edge(s, t);
  for (EdgeId e : m.edges()) {
    const LinkId tensor = new_link(LinkKind::Tensor);
    out.link_of_edge[static_cast<std::size_t>(e)] = tensor;
    const Edge& ed = g.edge(e);
    out.b_edge[static_cast<std::size_t>(ed.u)] = new_edge(b_source[static_cast<std::size_t>(ed.u)], tensor);
    out.b_edge[static_cast<std::size_t>(ed.v)] = new_edge(b_source[static_cast<std::size_t>(ed.v)], tensor);
  }
  out.edge_of_link.assign(raw.links.size(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.edge_of_link[static_cast<std::size_t>(out.link_of_edge[static_cast<std::size_t>(e)])] = e;
  }
  out.net = ProofStructure(std::move(raw));
  return out;
}

MatchedGraph pm_line_graph(const Graph& g, const TransitionSystem& t) {
  if (t.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, "transition system belongs to a different graph");
  }
  MatchedGraph mg;
  mg.graph = Graph(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    mg.graph.add_edge(2 * e, 2 * e + 1);
    mg.provenance.push_back({e});
  }
  auto end_at = [&](EdgeId e, VertexId u) { return g.edge(e).u == u ? 2 * e : 2 * e + 1; };
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (auto [e, f] : t.allowed(u)) {
      mg.graph.add_edge(end_at(e, u), end_at(f, u));
      mg.provenance.push_back({e, f});
    }
  }
  mg.matching = first_edges(mg.graph, g.edge_count());
  return mg;
}

SwitchingCycle alternating_to_switching(const ProofStructure& ps, const MatchedGraph& gf,
                                        const AlternatingCycle& c) {
  if (!is_alternating_cycle(gf.graph, gf.matching, c)) {
    throw Error(ErrorCode::NotAlternating, "cycle is not alternating for the graphification");
  }
  const std::size_t k = c.edges.size();
  const std::size_t start = gf.matching.contains(c.edges[0]) ? 0 : 1;
  std::vector<EdgeId> ring;
  for (std::size_t j = 0; j < k / 2; ++j) {
    const EdgeId hop = c.edges[(start + 2 * j + 1) % k];
    // Pick a proof-structure edge not used yet; two hops between the same
    // pair of links must map to distinct parallel edges.
    int chosen = -1;
    for (int d : gf.provenance[static_cast<std::size_t>(hop)]) {
      if (std::find(ring.begin(), ring.end(), d) == ring.end()) {
        chosen = d;
        break;
      }
    }
    if (chosen < 0) throw Error(ErrorCode::NotAlternating, "cycle reuses a proof-structure edge");
    ring.push_back(chosen);
  }
  const PairedGraph pg = correctness_graph(ps);
  AlternatingCycle shaped = canonical_cycle(pg.graph, std::move(ring));
  SwitchingCycle sc{std::move(shaped.vertices), std::move(shaped.edges)};
  if (!is_switching_cycle(pg, sc)) {
    throw Error(ErrorCode::NotAlternating, "alternating cycle does not map to a switching cycle");
  }
  return sc;
}

AlternatingCycle switching_to_alternating(const ProofStructure& ps, const MatchedGraph& gf,
                                          const SwitchingCycle& c) {
  const PairedGraph pg = correctness_graph(ps);
  if (!is_switching_cycle(pg, c)) {
    throw Error(ErrorCode::NotASwitchingCycle, "not a switching cycle of the structure");
  }
  const std::size_t k = c.edges.size();
  // Endpoint of l's matching edge used by proof-structure edge d, when l is
  // the target of d; sources may use either endpoint.
  auto forced = [&](LinkId l, int d) -> VertexId {
    const Arc a = ps.edge(d);
    if (a.target != l) return kNoVertex;
    const bool second = ps.kind(l) == LinkKind::Tensor && ps.in_edges(l)[1] == d;
    return second ? graph_b(l) : graph_a(l);
  };
  auto flip = [](LinkId l, VertexId x) { return x == graph_a(l) ? graph_b(l) : graph_a(l); };
  std::vector<VertexId> walk;
  for (std::size_t i = 0; i < k; ++i) {
    const LinkId l = c.links[i];
    const VertexId in = forced(l, c.edges[(i + k - 1) % k]);
    const VertexId out = forced(l, c.edges[i]);
    VertexId entry = graph_a(l), exit = graph_b(l);
    if (in != kNoVertex && out != kNoVertex) {
      if (in == out) throw Error(ErrorCode::NotASwitchingCycle, "cycle crosses both premises of a par");
      entry = in;
      exit = out;
    } else if (in != kNoVertex) {
      entry = in;
      exit = flip(l, in);
    } else if (out != kNoVertex) {
      exit = out;
      entry = flip(l, out);
    }
    walk.push_back(entry);
    walk.push_back(exit);
  }
  AlternatingCycle ac = cycle_from_vertices(gf.graph, walk);
  if (!is_alternating_cycle(gf.graph, gf.matching, ac)) {
    throw Error(ErrorCode::NotASwitchingCycle, "mapped cycle is not alternating");
  }
  return ac;
}

bool verify_rb_equals_lpm(const ConclusionNet& cn) {
  const MatchedGraph rb = rb_graph(cn);
  const PairedGraph pg = correctness_graph(cn);
  const MatchedGraph lpm = pm_line_graph(pg.graph, pairs_to_transitions(pg));
  if (rb.graph.vertex_count() != lpm.graph.vertex_count()) return false;
  auto pairs_of = [](const MatchedGraph& mg) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : mg.graph.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return pairs_of(rb) == pairs_of(lpm) && rb.matching == lpm.matching;
}

}  // namespace upmnet
