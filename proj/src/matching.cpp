#include "upmnet/matching.hpp"

#include <algorithm>
#include <string>

#include "edmonds.hpp"
#include "upmnet/error.hpp"

namespace upmnet {

namespace {

Matching grow(const Graph& g, const EdgeMask* present) {
  detail::AugmentingSearch search(g, present);
  std::vector<VertexId> mate(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (mate[static_cast<std::size_t>(v)] != kNoVertex) continue;
    if (auto path = search.find_from(v, mate)) detail::augment(mate, *path);
  }
  return Matching::from_mates(g, mate);
}

UniquenessVerdict uniqueness(const Graph& g, const EdgeMask* present, const Matching& m) {
  if (m.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::NotPerfect, "matching belongs to a different graph");
  }
  EdgeMask mask = present ? *present : EdgeMask::all(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m.mate(v) != kNoVertex) continue;
    for (const Incidence& inc : g.incident(v)) {
      if (mask[inc.edge]) {
        throw Error(ErrorCode::NotPerfect, "vertex " + std::to_string(v) + " is unmatched");
      }
    }
    if (!present) throw Error(ErrorCode::NotPerfect, "vertex " + std::to_string(v) + " is unmatched");
  }

  detail::AugmentingSearch search(g, &mask);
  std::vector<VertexId> mate = m.mates();
  for (EdgeId e : m.edges()) {
    if (!mask[e]) continue;
    const Edge& ed = g.edge(e);
    mate[static_cast<std::size_t>(ed.u)] = kNoVertex;
    mate[static_cast<std::size_t>(ed.v)] = kNoVertex;
    mask.set(e, false);
    auto path = search.find_from(ed.u, mate);
    mask.set(e, true);
    mate[static_cast<std::size_t>(ed.u)] = ed.v;
    mate[static_cast<std::size_t>(ed.v)] = ed.u;
    if (!path) continue;
    std::vector<EdgeId> ring = detail::path_edges(g, *path);
    ring.push_back(e);
    return {false, canonical_cycle(g, std::move(ring))};
  }
  return {true, std::nullopt};
}

}  // namespace

Matching maximum_matching(const Graph& g) { return grow(g, nullptr); }
Matching maximum_matching(const Graph& g, const EdgeMask& present) { return grow(g, &present); }

bool has_perfect_matching(const Graph& g) {
  return g.vertex_count() % 2 == 0 && maximum_matching(g).is_perfect();
}

UniquenessVerdict is_unique_pm(const Graph& g, const Matching& m) { return uniqueness(g, nullptr, m); }

UniquenessVerdict is_unique_pm(const Graph& g, const EdgeMask& present, const Matching& m) {
  return uniqueness(g, &present, m);
}

std::optional<AlternatingPath> find_alternating_path_through(const Graph& g, const Matching& m,
                                                             VertexId u, VertexId v, EdgeId e) {
  if (m.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "matching belongs to a different graph");
  }
  std::vector<VertexId> free = m.unmatched();
  std::vector<VertexId> expected{std::min(u, v), std::max(u, v)};
  if (u == v || free != expected) {
    throw Error(ErrorCode::PreconditionViolated, "u and v must be the only unmatched vertices");
  }
  if (!m.contains(e)) throw Error(ErrorCode::PreconditionViolated, "prescribed edge is not matched");

  const Edge ab = g.edge(e);
  EdgeMask mask = EdgeMask::all(g);
  mask.set(e, false);
  std::vector<VertexId> mate = m.mates();
  mate[static_cast<std::size_t>(ab.u)] = kNoVertex;
  mate[static_cast<std::size_t>(ab.v)] = kNoVertex;

  // Two augmenting paths turn M - e into a perfect matching of G - e.
  detail::AugmentingSearch search(g, &mask);
  for (int round = 0; round < 2; ++round) {
    bool grown = false;
    for (VertexId r : {u, v, ab.u, ab.v}) {
      if (mate[static_cast<std::size_t>(r)] != kNoVertex) continue;
      if (auto path = search.find_from(r, mate)) {
        detail::augment(mate, *path);
        grown = true;
        break;
      }
    }
    if (!grown) return std::nullopt;
  }

  std::vector<EdgeId> old_edges;
  for (EdgeId x : m.edges()) {
    if (x != e) old_edges.push_back(x);
  }
  const Matching m_old(g, old_edges);
  const Matching m_new = Matching::from_mates(g, mate);
  BergeDecomposition parts = symmetric_difference_decompose(g, m_old, m_new);
  if (parts.paths.size() != 2) {
    throw Error(ErrorCode::PreconditionViolated, "unexpected symmetric difference shape");
  }

  auto path_from = [&](VertexId start) -> AlternatingPath {
    for (const AlternatingPath& p : parts.paths) {
      if (p.vertices.front() == start) return p;
      if (p.vertices.back() == start) {
        AlternatingPath r = p;
        std::reverse(r.vertices.begin(), r.vertices.end());
        std::reverse(r.edges.begin(), r.edges.end());
        return r;
      }
    }
    throw Error(ErrorCode::PreconditionViolated, "no path ends at vertex " + std::to_string(start));
  };

  AlternatingPath head = path_from(u);
  const VertexId near = head.vertices.back();
  if (near == v) {
    throw Error(ErrorCode::PreconditionViolated, "matching has an alternating cycle through e");
  }
  AlternatingPath tail = path_from(ab.other(near));
  head.edges.push_back(e);
  head.edges.insert(head.edges.end(), tail.edges.begin(), tail.edges.end());
  head.vertices.insert(head.vertices.end(), tail.vertices.begin(), tail.vertices.end());
  return head;
}

}  // namespace upmnet
