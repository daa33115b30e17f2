#include "upmnet/generators.hpp"

#include <algorithm>
#include <limits>

#include "upmnet/error.hpp"

namespace upmnet {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

namespace {

struct Piece {
  std::vector<LinkId> open;  // one entry per free conclusion slot
};

}  // namespace

ProofStructure generate_correct_net(Rng& rng, const NetParams& params) {
  if (params.size < 1) throw Error(ErrorCode::InvalidInput, "a net needs at least one link");
  RawProofStructure raw;
  std::vector<Piece> pieces;
  int pars = 0;
  auto add_link = [&](LinkKind k) {
    raw.links.push_back(k);
    return static_cast<LinkId>(raw.links.size()) - 1;
  };
  auto take_slot = [&](Piece& p) {
    const int i = rng.index(p.open.size());
    const LinkId l = p.open[static_cast<std::size_t>(i)];
    p.open.erase(p.open.begin() + i);
    return l;
  };
  // In MLL mode every extra piece still owes one tensor.
  auto used = [&] {
    const int joins = params.mll && !pieces.empty() ? static_cast<int>(pieces.size()) - 1 : 0;
    return static_cast<int>(raw.links.size()) + joins;
  };

  enum Choice { Ax, Tensor, Par, Mix };
  for (;;) {
    const int budget = params.size - used();
    std::vector<std::pair<Choice, int>> options;
    if (budget >= (params.mll && !pieces.empty() ? 2 : 1)) options.emplace_back(Ax, params.w_ax);
    if (pieces.size() >= 2 && (params.mll || budget >= 1)) options.emplace_back(Tensor, params.w_tensor);
    if (pieces.size() >= 2 && !params.mll) options.emplace_back(Mix, params.w_mix);
    const bool par_room = std::any_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.open.size() >= 2; });
    if (par_room && budget >= 1 && pars < params.max_pars) options.emplace_back(Par, params.w_par);
    if (budget <= 0 && !(params.mll && pieces.size() >= 2)) break;
    int total = 0;
    for (auto& [c, w] : options) total += std::max(w, 0);
    if (total == 0) break;
    int pick = rng.index(static_cast<std::size_t>(total));
    Choice choice = options.front().first;
    for (auto& [c, w] : options) {
      if (pick < std::max(w, 0)) {
        choice = c;
        break;
      }
      pick -= std::max(w, 0);
    }
    switch (choice) {
      case Ax: {
        const LinkId l = add_link(LinkKind::Ax);
        pieces.push_back({{l, l}});
        break;
      }
      case Par: {
        std::vector<int> candidates;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          if (pieces[i].open.size() >= 2) candidates.push_back(static_cast<int>(i));
        }
        Piece& p = pieces[static_cast<std::size_t>(candidates[static_cast<std::size_t>(rng.index(candidates.size()))])];
        const LinkId a = take_slot(p);
        const LinkId b = take_slot(p);
        const LinkId l = add_link(LinkKind::Par);
        raw.edges.push_back({a, l});
        raw.edges.push_back({b, l});
        p.open.push_back(l);
        ++pars;
        break;
      }
      case Tensor:
      case Mix: {
        const int i = rng.index(pieces.size());
        int j = rng.index(pieces.size() - 1);
        if (j >= i) ++j;
        Piece& left = pieces[static_cast<std::size_t>(i)];
        Piece& right = pieces[static_cast<std::size_t>(j)];
        if (choice == Tensor) {
          const LinkId a = take_slot(left);
          const LinkId b = take_slot(right);
          const LinkId l = add_link(LinkKind::Tensor);
          raw.edges.push_back({a, l});
          raw.edges.push_back({b, l});
          left.open.push_back(l);
        }
        left.open.insert(left.open.end(), right.open.begin(), right.open.end());
        pieces.erase(pieces.begin() + j);
        break;
      }
    }
  }
  return ProofStructure(std::move(raw));
}

ProofStructure rewire_premise(Rng& rng, const ProofStructure& ps) {
  std::vector<int> premise_edges(static_cast<std::size_t>(ps.edge_count()));
  for (int e = 0; e < ps.edge_count(); ++e) premise_edges[static_cast<std::size_t>(e)] = e;
  rng.shuffle(premise_edges);
  for (int e : premise_edges) {
    const Arc old = ps.edge(e);
    std::vector<LinkId> sources;
    for (LinkId s = 0; s < ps.link_count(); ++s) {
      if (s != old.source && s != old.target && ps.missing_conclusions(s) > 0) sources.push_back(s);
    }
    rng.shuffle(sources);
    for (LinkId s : sources) {
      RawProofStructure raw = ps.raw();
      raw.edges[static_cast<std::size_t>(e)].source = s;
      if (ProofStructure::validate(raw).ok()) return ProofStructure(std::move(raw));
    }
  }
  return ps;
}

namespace {

struct UpmBuilder {
  Rng& rng;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint8_t> matched;
  VertexId next = 0;

  // Returns the vertices of the generated piece.
  std::vector<VertexId> build(int pairs) {
    if (pairs == 0) return {};
    if (pairs >= 2 && rng.chance(1, 4)) {
      const int a = 1 + rng.index(static_cast<std::size_t>(pairs - 1));
      auto l = build(a);
      auto r = build(pairs - a);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    const int a = rng.index(static_cast<std::size_t>(pairs));
    auto l = build(a);
    auto r = build(pairs - 1 - a);
    const VertexId u = next++, v = next++;
    edges.emplace_back(u, v);
    matched.push_back(1);
    for (auto [side, end] : {std::pair{&l, u}, std::pair{&r, v}}) {
      for (VertexId w : *side) {
        if (rng.chance(1, 3)) {
          edges.emplace_back(w, end);
          matched.push_back(0);
        }
      }
    }
    l.insert(l.end(), r.begin(), r.end());
    l.push_back(u);
    l.push_back(v);
    return l;
  }
};

}  // namespace

GeneratedUpm generate_upm(Rng& rng, int pairs) {
  if (pairs < 0) throw Error(ErrorCode::InvalidInput, "negative size");
  UpmBuilder b{rng, {}, {}, 0};
  b.build(pairs);
  std::vector<VertexId> rename(static_cast<std::size_t>(b.next));
  for (VertexId v = 0; v < b.next; ++v) rename[static_cast<std::size_t>(v)] = v;
  rng.shuffle(rename);
  std::vector<std::size_t> order(b.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  GeneratedUpm out{Graph(b.next), Matching()};
  std::vector<EdgeId> matching;
  for (std::size_t i : order) {
    auto [x, y] = b.edges[i];
    const EdgeId e = out.graph.add_edge(rename[static_cast<std::size_t>(x)], rename[static_cast<std::size_t>(y)]);
    if (b.matched[i]) matching.push_back(e);
  }
  out.matching = Matching(out.graph, std::move(matching));
  return out;
}

Graph random_graph(Rng& rng, int vertices, int permille) {
  Graph g(vertices);
  for (VertexId u = 0; u < vertices; ++u) {
    for (VertexId v = u + 1; v < vertices; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(permille), 1000)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace upmnet
