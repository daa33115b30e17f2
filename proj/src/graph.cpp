#include "upmnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "upmnet/error.hpp"

namespace upmnet {

namespace {

template <class Present>
Components label_components(const Graph& g, Present present) {
  Components out;
  out.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (out.label[static_cast<std::size_t>(s)] != -1) continue;
    const int id = out.count++;
    out.label[static_cast<std::size_t>(s)] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : g.incident(queue[head])) {
        if (!present(inc.edge)) continue;
        int& l = out.label[static_cast<std::size_t>(inc.neighbor)];
        if (l == -1) {
          l = id;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return out;
}

// Iterative low-link DFS. Skips the parent *edge* rather than the parent vertex
// so parallel edges are never reported as bridges.
template <class Present>
void low_link_bridges(const Graph& g, Present present, std::span<const VertexId> roots,
                      std::vector<int>& disc, std::vector<int>& low, std::vector<EdgeId>& out) {
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (VertexId root : roots) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, kNoEdge, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence step = inc[f.next++];
        if (step.edge == f.via || !present(step.edge)) continue;
        auto w = static_cast<std::size_t>(step.neighbor);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({step.neighbor, step.edge, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto parent = static_cast<std::size_t>(stack.back().v);
        auto child = static_cast<std::size_t>(done.v);
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] > disc[parent]) out.push_back(done.via);
      }
    }
  }
}

}  // namespace

Graph::Graph(int vertex_count, bool allow_parallel)
    : allow_parallel_(allow_parallel), adjacency_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
}

VertexId Graph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

std::uint64_t Graph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidInput,
                "edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  if (u == v) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(u));
  const auto id = static_cast<EdgeId>(edges_.size());
  auto [it, inserted] = first_edge_.try_emplace(key(u, v), id);
  if (!inserted && !allow_parallel_) {
    throw Error(ErrorCode::InvalidInput,
                "parallel edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  edges_.push_back({u, v});
  adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
  adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  return id;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  auto it = first_edge_.find(key(u, v));
  if (it == first_edge_.end()) return std::nullopt;
  return it->second;
}

int EdgeMask::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<int> Components::sizes() const {
  std::vector<int> out(static_cast<std::size_t>(count), 0);
  for (int l : label) ++out[static_cast<std::size_t>(l)];
  return out;
}

std::vector<std::vector<VertexId>> Components::members() const {
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < label.size(); ++v) {
    out[static_cast<std::size_t>(label[v])].push_back(static_cast<VertexId>(v));
  }
  return out;
}

Components connected_components(const Graph& g) {
  return label_components(g, [](EdgeId) { return true; });
}

Components connected_components(const Graph& g, const EdgeMask& present) {
  return label_components(g, [&](EdgeId e) { return present[e]; });
}

std::vector<EdgeId> bridges(const Graph& g) { return bridges(g, EdgeMask::all(g)); }

std::vector<EdgeId> bridges(const Graph& g, const EdgeMask& present) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<VertexId> roots(n);
  std::iota(roots.begin(), roots.end(), 0);
  std::vector<EdgeId> out;
  low_link_bridges(g, [&](EdgeId e) { return present[e]; }, roots, disc, low, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> bridges_in_component(const Graph& g, const EdgeMask& present, VertexId root) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  const VertexId roots[] = {root};
  low_link_bridges(g, [&](EdgeId e) { return present[e]; }, roots, disc, low, out);
  std::sort(out.begin(), out.end());
  return out;
}

Matching::Matching(const Graph& g, std::vector<EdgeId> edges)
    : edges_(std::move(edges)),
      at_vertex_(static_cast<std::size_t>(g.vertex_count()), kNoEdge),
      mate_(static_cast<std::size_t>(g.vertex_count()), kNoVertex),
      member_(static_cast<std::size_t>(g.edge_count()), 0) {
  std::sort(edges_.begin(), edges_.end());
  for (EdgeId e : edges_) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::InvalidInput, "matching edge id out of range: " + std::to_string(e));
    }
    if (member_[static_cast<std::size_t>(e)]) {
      throw Error(ErrorCode::InvalidInput, "matching lists edge " + std::to_string(e) + " twice");
    }
    member_[static_cast<std::size_t>(e)] = 1;
    const Edge& ed = g.edge(e);
    for (VertexId w : {ed.u, ed.v}) {
      if (at_vertex_[static_cast<std::size_t>(w)] != kNoEdge) {
        throw Error(ErrorCode::InvalidInput,
                    "matching edges share vertex " + std::to_string(w));
      }
      at_vertex_[static_cast<std::size_t>(w)] = e;
    }
    mate_[static_cast<std::size_t>(ed.u)] = ed.v;
    mate_[static_cast<std::size_t>(ed.v)] = ed.u;
  }
}

Matching Matching::from_mates(const Graph& g, const std::vector<VertexId>& mate) {
  std::vector<EdgeId> es;
  for (VertexId v = 0; v < static_cast<VertexId>(mate.size()); ++v) {
    const VertexId w = mate[static_cast<std::size_t>(v)];
    if (w == kNoVertex || w < v) continue;
    auto e = g.find_edge(v, w);
    if (!e) throw Error(ErrorCode::InvalidInput, "mate pair is not an edge");
    es.push_back(*e);
  }
  return Matching(g, std::move(es));
}

bool Matching::is_perfect() const {
  return std::none_of(mate_.begin(), mate_.end(), [](VertexId w) { return w == kNoVertex; });
}

std::vector<VertexId> Matching::unmatched() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    if (mate_[v] == kNoVertex) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

AlternatingCycle canonical_cycle(const Graph& g, std::vector<EdgeId> es) {
  AlternatingCycle c;
  const std::size_t k = es.size();
  if (k == 0) return c;
  auto lowest = std::min_element(es.begin(), es.end());
  std::rotate(es.begin(), lowest, es.end());
  if (k > 2 && es[k - 1] < es[1]) std::reverse(es.begin() + 1, es.end());
  c.edges = std::move(es);
  c.vertices.resize(k);
  if (k == 2) {
    const Edge& e0 = g.edge(c.edges[0]);
    c.vertices[0] = std::min(e0.u, e0.v);
    c.vertices[1] = std::max(e0.u, e0.v);
    return c;
  }
  // vertices[0] is the endpoint of edges[0] shared with edges[k-1].
  const Edge& first = g.edge(c.edges[0]);
  const Edge& last = g.edge(c.edges[k - 1]);
  VertexId cur = last.has(first.u) ? first.u : first.v;
  for (std::size_t i = 0; i < k; ++i) {
    c.vertices[i] = cur;
    cur = g.edge(c.edges[i]).other(cur);
  }
  return c;
}

AlternatingCycle cycle_from_vertices(const Graph& g, const std::vector<VertexId>& walk) {
  std::vector<EdgeId> es;
  es.reserve(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    auto e = g.find_edge(walk[i], walk[(i + 1) % walk.size()]);
    if (!e) throw Error(ErrorCode::InvalidInput, "closed walk uses a non-edge");
    es.push_back(*e);
  }
  return canonical_cycle(g, std::move(es));
}

bool is_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycle& c) {
  const std::size_t k = c.edges.size();
  if (k < 2 || k % 2 != 0 || c.vertices.size() != k) return false;
  std::vector<VertexId> seen = c.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    const VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (!(ed.has(a) && ed.has(b))) return false;
    if (m.contains(e) == m.contains(c.edges[(i + 1) % k])) return false;
  }
  return true;
}

bool is_alternating_path(const Graph& g, const Matching& m, const AlternatingPath& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  std::vector<VertexId> seen = p.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (!(ed.has(p.vertices[i]) && ed.has(p.vertices[i + 1]))) return false;
    if (i > 0 && m.contains(e) == m.contains(p.edges[i - 1])) return false;
  }
  return true;
}

BergeDecomposition symmetric_difference_decompose(const Graph& g, const Matching& m1,
                                                  const Matching& m2) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeId>> around(n);
  std::vector<EdgeId> diff;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (m1.contains(e) == m2.contains(e)) continue;
    diff.push_back(e);
    around[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    around[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::vector<std::uint8_t> used(static_cast<std::size_t>(g.edge_count()), 0);
  auto next_unused = [&](VertexId v) -> EdgeId {
    for (EdgeId e : around[static_cast<std::size_t>(v)]) {
      if (!used[static_cast<std::size_t>(e)]) return e;
    }
    return kNoEdge;
  };

  BergeDecomposition out;
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    if (around[static_cast<std::size_t>(s)].size() != 1 || next_unused(s) == kNoEdge) continue;
    AlternatingPath p;
    p.vertices.push_back(s);
    VertexId cur = s;
    for (EdgeId e = next_unused(cur); e != kNoEdge; e = next_unused(cur)) {
      used[static_cast<std::size_t>(e)] = 1;
      cur = g.edge(e).other(cur);
      p.edges.push_back(e);
      p.vertices.push_back(cur);
    }
    out.paths.push_back(std::move(p));
  }
  for (EdgeId start : diff) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<EdgeId> ring;
    VertexId cur = g.edge(start).u;
    for (EdgeId e = start; e != kNoEdge; e = next_unused(cur)) {
      used[static_cast<std::size_t>(e)] = 1;
      ring.push_back(e);
      cur = g.edge(e).other(cur);
    }
    out.cycles.push_back(canonical_cycle(g, std::move(ring)));
  }
  return out;
}

namespace {

void extend_perfect(const Graph& g, std::vector<VertexId>& mate, std::vector<EdgeId>& chosen,
                    VertexId from, std::size_t cap, std::vector<Matching>& out) {
  VertexId v = from;
  while (v < g.vertex_count() && mate[static_cast<std::size_t>(v)] != kNoVertex) ++v;
  if (v == g.vertex_count()) {
    if (out.size() >= cap) {
      throw Error(ErrorCode::CapExceeded,
                  "more than " + std::to_string(cap) + " perfect matchings");
    }
    out.emplace_back(g, chosen);
    return;
  }
  for (const Incidence& inc : g.incident(v)) {
    if (mate[static_cast<std::size_t>(inc.neighbor)] != kNoVertex) continue;
    mate[static_cast<std::size_t>(v)] = inc.neighbor;
    mate[static_cast<std::size_t>(inc.neighbor)] = v;
    chosen.push_back(inc.edge);
    extend_perfect(g, mate, chosen, v + 1, cap, out);
    chosen.pop_back();
    mate[static_cast<std::size_t>(v)] = kNoVertex;
    mate[static_cast<std::size_t>(inc.neighbor)] = kNoVertex;
  }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::size_t cap) {
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<VertexId> mate(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
  std::vector<EdgeId> chosen;
  extend_perfect(g, mate, chosen, 0, cap, out);
  return out;
}

}  // namespace upmnet
