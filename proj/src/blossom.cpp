#include "upmnet/blossom.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "upmnet/error.hpp"

namespace upmnet {

namespace {

// Walks simple alternating paths root -x- v1 =M= v2 -x- ... =M= v2k and
// reports each one that closes back to the root with a non-matching edge.
template <class Report>
void grow(const Graph& g, const Matching& m, VertexId root, std::vector<VertexId>& path,
          std::vector<EdgeId>& edges, std::vector<std::uint8_t>& on_path, Report& report) {
  const VertexId tip = path.back();
  for (const Incidence& step : g.incident(tip)) {
    const VertexId a = step.neighbor;
    if (m.contains(step.edge) || on_path[static_cast<std::size_t>(a)]) continue;
    const VertexId b = m.mate(a);
    if (b == kNoVertex || on_path[static_cast<std::size_t>(b)]) continue;
    path.push_back(a);
    path.push_back(b);
    edges.push_back(step.edge);
    edges.push_back(m.edge_at(a));
    on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(b)] = 1;
    for (const Incidence& back : g.incident(b)) {
      if (back.neighbor == root && !m.contains(back.edge)) {
        edges.push_back(back.edge);
        report(edges);
        edges.pop_back();
      }
    }
    grow(g, m, root, path, edges, on_path, report);
    on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(b)] = 0;
    edges.pop_back();
    edges.pop_back();
    path.pop_back();
    path.pop_back();
  }
}

template <class Report>
void search_stem(const Graph& g, const Matching& m, EdgeId f, Report& report) {
  if (!m.contains(f)) throw Error(ErrorCode::PreconditionViolated, "stem is not a matching edge");
  const Edge stem = g.edge(f);
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId root : {stem.u, stem.v}) {
    std::vector<VertexId> path{root};
    std::vector<EdgeId> edges;
    on_path[static_cast<std::size_t>(root)] = 1;
    on_path[static_cast<std::size_t>(stem.other(root))] = 1;
    auto tagged = [&](const std::vector<EdgeId>& cyc) { report(root, cyc); };
    grow(g, m, root, path, edges, on_path, tagged);
    on_path[static_cast<std::size_t>(root)] = 0;
    on_path[static_cast<std::size_t>(stem.other(root))] = 0;
  }
}

}  // namespace

std::vector<Blossom> blossoms_with_stem(const Graph& g, const Matching& m, EdgeId f, std::size_t cap) {
  std::set<std::tuple<VertexId, std::vector<EdgeId>>> seen;
  std::vector<Blossom> out;
  auto report = [&](VertexId root, const std::vector<EdgeId>& cyc) {
    AlternatingCycle c = canonical_cycle(g, cyc);
    if (!seen.emplace(root, c.edges).second) return;
    if (out.size() >= cap) {
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " blossoms");
    }
    out.push_back({std::move(c.vertices), std::move(c.edges), root, f});
  };
  search_stem(g, m, f, report);
  std::sort(out.begin(), out.end(), [](const Blossom& a, const Blossom& b) {
    return std::tie(a.root, a.cycle) < std::tie(b.root, b.cycle);
  });
  return out;
}

Relation stem_relation(const Graph& g, const Matching& m) {
  Relation out(g.edge_count());
  for (EdgeId f : m.edges()) {
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(g.edge_count()), 0);
    auto report = [&](VertexId, const std::vector<EdgeId>& cyc) {
      for (EdgeId e : cyc) {
        if (m.contains(e)) hit[static_cast<std::size_t>(e)] = 1;
      }
    };
    search_stem(g, m, f, report);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (hit[static_cast<std::size_t>(e)]) out.insert(e, f);
    }
  }
  return out;
}

}  // namespace upmnet
