#include "upmnet/transitions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "upmnet/error.hpp"
#include "upmnet/matching.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/translations.hpp"

namespace upmnet {

TransitionSystem::TransitionSystem(const Graph& g, std::vector<std::vector<Pair>> allowed)
    : allowed_(std::move(allowed)) {
  if (static_cast<int>(allowed_.size()) != g.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, "one transition list per vertex expected");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& list = allowed_[static_cast<std::size_t>(v)];
    for (auto& [e, f] : list) {
      if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count() || e == f ||
          !g.edge(e).has(v) || !g.edge(f).has(v)) {
        throw Error(ErrorCode::InvalidInput, "transition (" + std::to_string(e) + ", " + std::to_string(f) +
                                                 ") is not a pair of edges at vertex " + std::to_string(v));
      }
      if (e > f) std::swap(e, f);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

TransitionSystem TransitionSystem::complete(const Graph& g) {
  std::vector<std::vector<Pair>> all(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) all[static_cast<std::size_t>(v)].emplace_back(inc[i].edge, inc[j].edge);
    }
  }
  return TransitionSystem(g, std::move(all));
}

TransitionSystem TransitionSystem::none(const Graph& g) {
  return TransitionSystem(g, std::vector<std::vector<Pair>>(static_cast<std::size_t>(g.vertex_count())));
}

bool TransitionSystem::allows(VertexId v, EdgeId e, EdgeId f) const {
  if (e > f) std::swap(e, f);
  const auto& list = allowed(v);
  return std::binary_search(list.begin(), list.end(), Pair{e, f});
}

TransitionSystem pairs_to_transitions(const PairedGraph& pg) {
  const Graph& g = pg.graph;
  std::vector<std::vector<TransitionSystem::Pair>> all(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const EdgeId e = inc[i].edge, f = inc[j].edge;
        const int p = pg.pair_of_edge[static_cast<std::size_t>(e)];
        const bool paired = p >= 0 && p == pg.pair_of_edge[static_cast<std::size_t>(f)] &&
                            pg.pair_vertex[static_cast<std::size_t>(p)] == v;
        if (!paired) all[static_cast<std::size_t>(v)].emplace_back(e, f);
      }
    }
  }
  return TransitionSystem(g, std::move(all));
}

ClosedTrail canonical_trail(const Graph& g, const ClosedTrail& t) {
  (void)g;
  const std::size_t k = t.edges.size();
  if (k == 0) return t;
  const auto r = static_cast<std::size_t>(std::min_element(t.edges.begin(), t.edges.end()) - t.edges.begin());
  ClosedTrail fwd, rev;
  for (std::size_t i = 0; i < k; ++i) {
    fwd.edges.push_back(t.edges[(r + i) % k]);
    fwd.vertices.push_back(t.vertices[(r + i) % k]);
  }
  rev.edges.push_back(fwd.edges[0]);
  rev.vertices.push_back(fwd.vertices[1 % k]);
  for (std::size_t i = k - 1; i >= 1; --i) {
    rev.edges.push_back(fwd.edges[i]);
    rev.vertices.push_back(fwd.vertices[(i + 1) % k]);
  }
  return std::tie(rev.edges, rev.vertices) < std::tie(fwd.edges, fwd.vertices) ? rev : fwd;
}

bool is_compatible_closed_trail(const Graph& g, const TransitionSystem& t, const ClosedTrail& trail) {
  const std::size_t k = trail.edges.size();
  if (k < 2 || trail.vertices.size() != k) return false;
  std::vector<EdgeId> es = trail.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = trail.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    const VertexId from = trail.vertices[i], to = trail.vertices[(i + 1) % k];
    if (!((ed.u == from && ed.v == to) || (ed.u == to && ed.v == from))) return false;
    if (!t.allows(to, e, trail.edges[(i + 1) % k])) return false;
  }
  return true;
}

std::optional<ClosedTrail> find_compatible_closed_trail(const Graph& g, const TransitionSystem& t) {
  const MatchedGraph lpm = pm_line_graph(g, t);
  const UniquenessVerdict verdict = is_unique_pm(lpm.graph, lpm.matching);
  if (verdict.unique) return std::nullopt;
  const AlternatingCycle& c = *verdict.witness;
  const std::size_t k = c.edges.size();
  const std::size_t start = lpm.matching.contains(c.edges[0]) ? 0 : 1;
  ClosedTrail trail;
  for (std::size_t j = 0; j < k / 2; ++j) {
    const std::size_t i = (start + 2 * j) % k;
    const EdgeId e = c.edges[i];
    const VertexId w = c.vertices[i];
    trail.edges.push_back(e);
    trail.vertices.push_back(w % 2 == 0 ? g.edge(e).u : g.edge(e).v);
  }
  return canonical_trail(g, trail);
}

namespace {

class TrailSearch {
 public:
  TrailSearch(const Graph& g, const TransitionSystem& t, std::size_t cap)
      : g_(g), t_(t), cap_(cap), used_(static_cast<std::size_t>(g.edge_count()), 0) {}

  std::vector<ClosedTrail> run() {
    for (EdgeId s = 0; s < g_.edge_count(); ++s) {
      for (VertexId from : {g_.edge(s).u, g_.edge(s).v}) {
        trail_.vertices = {from};
        trail_.edges = {s};
        used_[static_cast<std::size_t>(s)] = 1;
        extend(s, g_.edge(s).other(from));
        used_[static_cast<std::size_t>(s)] = 0;
      }
    }
    return {found_.begin(), found_.end()};
  }

 private:
  // Only edges with ids above the first one are used, so every trail is met
  // from its smallest edge, once per orientation.
  void extend(EdgeId first, VertexId at) {
    const EdgeId last = trail_.edges.back();
    if (at == trail_.vertices.front() && trail_.edges.size() >= 2 && t_.allows(at, last, first)) {
      record();
    }
    for (const Incidence& inc : g_.incident(at)) {
      if (inc.edge <= first || used_[static_cast<std::size_t>(inc.edge)] || !t_.allows(at, last, inc.edge)) {
        continue;
      }
      used_[static_cast<std::size_t>(inc.edge)] = 1;
      trail_.vertices.push_back(at);
      trail_.edges.push_back(inc.edge);
      extend(first, inc.neighbor);
      trail_.edges.pop_back();
      trail_.vertices.pop_back();
      used_[static_cast<std::size_t>(inc.edge)] = 0;
    }
  }

  void record() {
    ClosedTrail c = canonical_trail(g_, trail_);
    if (found_.count(c)) return;
    if (found_.size() >= cap_) {
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " closed trails");
    }
    found_.insert(std::move(c));
  }

  struct Less {
    bool operator()(const ClosedTrail& a, const ClosedTrail& b) const {
      return std::tie(a.edges, a.vertices) < std::tie(b.edges, b.vertices);
    }
  };

  const Graph& g_;
  const TransitionSystem& t_;
  std::size_t cap_;
  std::vector<std::uint8_t> used_;
  ClosedTrail trail_;
  std::set<ClosedTrail, Less> found_;
};

}  // namespace

std::vector<ClosedTrail> brute_force_closed_trails(const Graph& g, const TransitionSystem& t, std::size_t cap) {
  if (t.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, "transition system belongs to a different graph");
  }
  return TrailSearch(g, t, cap).run();
}

std::vector<ClosedTrail> brute_force_compatible_cycles(const Graph& g, const TransitionSystem& t,
                                                       std::size_t cap) {
  std::vector<ClosedTrail> out;
  for (ClosedTrail& c : brute_force_closed_trails(g, t, cap)) {
    std::vector<VertexId> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) == vs.end()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace upmnet
