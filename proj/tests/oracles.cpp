#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "upmnet/switching.hpp"

namespace oracles {

int max_matching_size(const Graph& g) {
  std::vector<std::uint8_t> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<int(VertexId)> best = [&](VertexId from) {
    VertexId v = from;
    while (v < g.vertex_count() && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= g.vertex_count()) return 0;
    used[static_cast<std::size_t>(v)] = 1;
    int top = best(v + 1);
    for (const Incidence& inc : g.incident(v)) {
      if (used[static_cast<std::size_t>(inc.neighbor)]) continue;
      used[static_cast<std::size_t>(inc.neighbor)] = 1;
      top = std::max(top, 1 + best(v + 1));
      used[static_cast<std::size_t>(inc.neighbor)] = 0;
    }
    used[static_cast<std::size_t>(v)] = 0;
    return top;
  };
  return best(0);
}

bool alternating_path_exists(const Graph& g, const Matching& m, VertexId u, VertexId v, EdgeId e) {
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<bool(VertexId, bool, bool)> walk = [&](VertexId at, bool want_matched, bool crossed) {
    if (at == v && !want_matched) return false;  // v unmatched; paths end on a non-matching edge
    if (at == v) return crossed;
    for (const Incidence& inc : g.incident(at)) {
      if (m.contains(inc.edge) != want_matched || on_path[static_cast<std::size_t>(inc.neighbor)]) continue;
      on_path[static_cast<std::size_t>(inc.neighbor)] = 1;
      const bool found = walk(inc.neighbor, !want_matched, crossed || inc.edge == e);
      on_path[static_cast<std::size_t>(inc.neighbor)] = 0;
      if (found) return true;
    }
    return false;
  };
  on_path[static_cast<std::size_t>(u)] = 1;
  return walk(u, false, false);
}

bool is_bridge_by_deletion(const Graph& g, EdgeId e) {
  EdgeMask mask = EdgeMask::all(g);
  const int before = connected_components(g, mask).count;
  mask.set(e, false);
  return connected_components(g, mask).count > before;
}

std::map<std::size_t, std::size_t> alternating_cycle_counts(const Graph& g, const Matching& m) {
  std::set<std::vector<EdgeId>> seen;
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> path;
  // Cycles are grown from their smallest matching edge s, leaving s.u.
  std::function<void(EdgeId, VertexId, VertexId, bool)> grow = [&](EdgeId s, VertexId start, VertexId at,
                                                                    bool want_matched) {
    for (const Incidence& inc : g.incident(at)) {
      if (m.contains(inc.edge) != want_matched) continue;
      if (want_matched && inc.edge < s) continue;
      if (!want_matched && inc.neighbor == start && path.size() >= 3) {
        std::vector<EdgeId> key = path;
        key.push_back(inc.edge);
        std::sort(key.begin(), key.end());
        seen.insert(std::move(key));
        continue;
      }
      if (on_path[static_cast<std::size_t>(inc.neighbor)]) continue;
      on_path[static_cast<std::size_t>(inc.neighbor)] = 1;
      path.push_back(inc.edge);
      grow(s, start, inc.neighbor, !want_matched);
      path.pop_back();
      on_path[static_cast<std::size_t>(inc.neighbor)] = 0;
    }
  };
  for (EdgeId s : m.edges()) {
    const Edge& ed = g.edge(s);
    on_path[static_cast<std::size_t>(ed.u)] = 1;
    on_path[static_cast<std::size_t>(ed.v)] = 1;
    path.push_back(s);
    grow(s, ed.u, ed.v, false);
    path.pop_back();
    on_path[static_cast<std::size_t>(ed.u)] = 0;
    on_path[static_cast<std::size_t>(ed.v)] = 0;
  }
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : seen) ++counts[c.size()];
  return counts;
}

bool switching_dependency(const ProofStructure& ps, LinkId p, LinkId q) {
  const PairedGraph pg = correctness_graph(ps);
  auto in = ps.in_edges(q);
  const LinkId s1 = ps.edge(in[0]).source;
  const LinkId s2 = ps.edge(in[1]).source;
  bool found = false;
  for_each_switching(pg, kDefaultPairBound, [&](const Switching&, const EdgeMask& mask) {
    // Drop q and everything touching it, then look for the s1-s2 path.
    EdgeMask without_q = mask;
    for (int e = 0; e < ps.edge_count(); ++e) {
      if (ps.edge(e).source == q || ps.edge(e).target == q) without_q.set(e, false);
    }
    if (s1 == s2) {
      found = p == s1;
      return !found;
    }
    std::vector<int> parent(static_cast<std::size_t>(ps.link_count()), -2);
    std::vector<LinkId> queue{s1};
    parent[static_cast<std::size_t>(s1)] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const Incidence& inc : pg.graph.incident(queue[h])) {
        if (!without_q[inc.edge] || parent[static_cast<std::size_t>(inc.neighbor)] != -2) continue;
        parent[static_cast<std::size_t>(inc.neighbor)] = queue[h];
        queue.push_back(inc.neighbor);
      }
    }
    if (parent[static_cast<std::size_t>(s2)] == -2) return true;
    // A correct net has forest switchings, so the BFS path is the only one.
    for (LinkId x = s2; x != -1; x = parent[static_cast<std::size_t>(x)]) {
      if (x == p) found = true;
    }
    return !found;
  });
  return found;
}

}  // namespace oracles
