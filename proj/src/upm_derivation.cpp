#include "upmnet/upm_derivation.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "upmnet/error.hpp"
#include "upmnet/matching.hpp"

namespace upmnet {

int UpmDerivation::count(UpmNode::Kind k) const {
  if (root < 0) return 0;
  int total = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const UpmNode& n = at(stack.back());
    stack.pop_back();
    if (n.kind == k) ++total;
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  return total;
}

std::vector<EdgeId> UpmDerivation::bridges_below(int i) const {
  std::vector<EdgeId> out;
  std::vector<int> stack;
  const UpmNode& top = at(i);
  if (top.left >= 0) stack.push_back(top.left);
  if (top.right >= 0) stack.push_back(top.right);
  while (!stack.empty()) {
    const UpmNode& n = at(stack.back());
    stack.pop_back();
    if (n.kind == UpmNode::Kind::Join) out.push_back(n.bridge);
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool structurally_equal(const UpmDerivation& a, const UpmDerivation& b) {
  std::function<bool(int, int)> same = [&](int x, int y) {
    if (x < 0 || y < 0) return x == y;
    const UpmNode& p = a.at(x);
    const UpmNode& q = b.at(y);
    return p.kind == q.kind && p.bridge == q.bridge && p.attach_left == q.attach_left &&
           p.attach_right == q.attach_right && same(p.left, q.left) && same(p.right, q.right);
  };
  return same(a.root, b.root);
}

namespace {

class Splitter {
 public:
  explicit Splitter(const Graph& g) : g_(g), stamp_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  /// Connected pieces of s under `present`, each sorted, ordered by first vertex.
  std::vector<std::vector<VertexId>> pieces(const std::vector<VertexId>& s, const EdgeMask& present) {
    ++clock_;
    std::vector<std::vector<VertexId>> out;
    for (VertexId start : s) {
      if (stamp_[static_cast<std::size_t>(start)] == clock_) continue;
      std::vector<VertexId> piece{start};
      stamp_[static_cast<std::size_t>(start)] = clock_;
      for (std::size_t head = 0; head < piece.size(); ++head) {
        for (const Incidence& inc : g_.incident(piece[head])) {
          if (!present[inc.edge] || stamp_[static_cast<std::size_t>(inc.neighbor)] == clock_) continue;
          stamp_[static_cast<std::size_t>(inc.neighbor)] = clock_;
          piece.push_back(inc.neighbor);
        }
      }
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
    return out;
  }

  struct Split {
    std::vector<VertexId> attach_left, attach_right, left, right;
  };

  /// Removes the bridge's endpoints from the connected set s. `erase` is
  /// called on every present edge they touch and must update `present`.
  template <class Erase>
  Split split(const std::vector<VertexId>& s, EdgeId bridge, const EdgeMask& present, Erase erase) {
    const Edge b = g_.edge(bridge);
    Split out;
    std::vector<EdgeId> doomed;
    for (auto [x, attach] : {std::pair{b.u, &out.attach_left}, std::pair{b.v, &out.attach_right}}) {
      for (const Incidence& inc : g_.incident(x)) {
        if (!present[inc.edge]) continue;
        if (inc.edge != bridge) attach->push_back(inc.neighbor);
        if (x == b.u || inc.edge != bridge) doomed.push_back(inc.edge);
      }
      std::sort(attach->begin(), attach->end());
    }
    for (EdgeId e : doomed) erase(e);

    std::vector<VertexId> rest;
    rest.reserve(s.size());
    for (VertexId w : s) {
      if (w != b.u && w != b.v) rest.push_back(w);
    }
    if (left_flag_.size() != stamp_.size()) left_flag_.assign(stamp_.size(), 0);
    for (VertexId w : out.attach_left) left_flag_[static_cast<std::size_t>(w)] = 1;
    // Since the bridge separated the two sides, each piece touches one attach set.
    for (auto& piece : pieces(rest, present)) {
      const bool left = std::any_of(piece.begin(), piece.end(), [&](VertexId w) {
        return left_flag_[static_cast<std::size_t>(w)] != 0;
      });
      auto& dst = left ? out.left : out.right;
      dst.insert(dst.end(), piece.begin(), piece.end());
    }
    for (VertexId w : out.attach_left) left_flag_[static_cast<std::size_t>(w)] = 0;
    std::sort(out.left.begin(), out.left.end());
    std::sort(out.right.begin(), out.right.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<int> stamp_;
  std::vector<std::uint8_t> left_flag_;
  int clock_ = 0;
};

struct Stuck {
  std::vector<VertexId> piece;
};

class Sequentializer {
 public:
  Sequentializer(const Graph& g, const Matching& m, BridgeOracle& oracle)
      : g_(g), m_(m), oracle_(oracle), splitter_(g) {}

  int build(const std::vector<VertexId>& s) {
    if (s.empty()) return d_.add({});
    auto parts = splitter_.pieces(s, oracle_.present());
    if (parts.size() > 1) {
      int acc = build(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        UpmNode u;
        u.kind = UpmNode::Kind::Union;
        u.left = acc;
        u.right = build(parts[i]);
        acc = d_.add(std::move(u));
      }
      return acc;
    }
    EdgeId chosen = kNoEdge;
    for (EdgeId e : oracle_.component_bridges(s.front())) {
      if (m_.contains(e)) {
        chosen = e;
        break;
      }
    }
    if (chosen == kNoEdge) throw Stuck{s};
    auto sp = splitter_.split(s, chosen, oracle_.present(), [&](EdgeId e) { oracle_.erase(e); });
    UpmNode j;
    j.kind = UpmNode::Kind::Join;
    j.bridge = chosen;
    j.attach_left = std::move(sp.attach_left);
    j.attach_right = std::move(sp.attach_right);
    j.left = build(sp.left);
    j.right = build(sp.right);
    return d_.add(std::move(j));
  }

  UpmDerivation take() { return std::move(d_); }

 private:
  const Graph& g_;
  const Matching& m_;
  BridgeOracle& oracle_;
  Splitter splitter_;
  UpmDerivation d_;
};

void require_perfect(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count() || !m.is_perfect()) {
    throw Error(ErrorCode::NotPerfect, "matching is not perfect");
  }
}

int graft(UpmDerivation& dst, const UpmDerivation& src, int i) {
  const UpmNode& n = src.at(i);
  UpmNode copy = n;
  if (n.left >= 0) copy.left = graft(dst, src, n.left);
  if (n.right >= 0) copy.right = graft(dst, src, n.right);
  return dst.add(std::move(copy));
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const Matching& m, std::size_t cap) : g_(g), m_(m), cap_(cap), splitter_(g) {}

  std::vector<UpmDerivation> all(const std::vector<VertexId>& s, const EdgeMask& present) {
    if (s.empty()) {
      UpmDerivation d;
      d.root = d.add({});
      return {std::move(d)};
    }
    auto parts = splitter_.pieces(s, present);
    if (parts.size() > 1) {
      std::vector<UpmDerivation> acc = all(parts[0], present);
      for (std::size_t i = 1; i < parts.size() && !acc.empty(); ++i) {
        acc = combine(acc, all(parts[i], present), [](UpmNode& u) { u.kind = UpmNode::Kind::Union; });
      }
      return acc;
    }
    std::vector<UpmDerivation> out;
    for (EdgeId e : bridges_in_component(g_, present, s.front())) {
      if (!m_.contains(e)) continue;
      EdgeMask mask = present;
      auto sp = splitter_.split(s, e, mask, [&](EdgeId x) { mask.set(x, false); });
      auto joined = combine(all(sp.left, mask), all(sp.right, mask), [&](UpmNode& u) {
        u.kind = UpmNode::Kind::Join;
        u.bridge = e;
        u.attach_left = sp.attach_left;
        u.attach_right = sp.attach_right;
      });
      for (auto& d : joined) out.push_back(std::move(d));
      check(out.size());
    }
    return out;
  }

 private:
  template <class Fill>
  std::vector<UpmDerivation> combine(const std::vector<UpmDerivation>& ls,
                                     const std::vector<UpmDerivation>& rs, Fill fill) {
    check(ls.size() * rs.size());
    std::vector<UpmDerivation> out;
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        UpmDerivation d;
        UpmNode top;
        fill(top);
        top.left = graft(d, l, l.root);
        top.right = graft(d, r, r.root);
        d.root = d.add(std::move(top));
        out.push_back(std::move(d));
      }
    }
    return out;
  }

  void check(std::size_t n) const {
    if (n > cap_) {
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " derivations");
    }
  }

  const Graph& g_;
  const Matching& m_;
  std::size_t cap_;
  Splitter splitter_;
};

bool replay(const UpmDerivation& d, int i, const Graph& g, const Matching& m,
            std::vector<std::uint8_t>& visited, std::vector<VertexId>& verts,
            std::vector<std::pair<VertexId, VertexId>>& edges, std::vector<EdgeId>& matched) {
  if (i < 0 || static_cast<std::size_t>(i) >= d.nodes.size() || visited[static_cast<std::size_t>(i)]) {
    return false;
  }
  visited[static_cast<std::size_t>(i)] = 1;
  const UpmNode& n = d.at(i);
  switch (n.kind) {
    case UpmNode::Kind::Empty:
      return n.left < 0 && n.right < 0;
    case UpmNode::Kind::Union: {
      std::vector<VertexId> l, r;
      if (!replay(d, n.left, g, m, visited, l, edges, matched)) return false;
      if (!replay(d, n.right, g, m, visited, r, edges, matched)) return false;
      if (l.empty() || r.empty()) return false;
      verts.insert(verts.end(), l.begin(), l.end());
      verts.insert(verts.end(), r.begin(), r.end());
      return true;
    }
    case UpmNode::Kind::Join: {
      if (n.bridge < 0 || n.bridge >= g.edge_count() || !m.contains(n.bridge)) return false;
      std::vector<VertexId> l, r;
      if (!replay(d, n.left, g, m, visited, l, edges, matched)) return false;
      if (!replay(d, n.right, g, m, visited, r, edges, matched)) return false;
      std::sort(l.begin(), l.end());
      std::sort(r.begin(), r.end());
      for (auto [side, attach] : {std::pair{&l, &n.attach_left}, std::pair{&r, &n.attach_right}}) {
        if (side->empty() != attach->empty()) return false;
        if (!std::is_sorted(attach->begin(), attach->end()) ||
            std::adjacent_find(attach->begin(), attach->end()) != attach->end() ||
            !std::includes(side->begin(), side->end(), attach->begin(), attach->end())) {
          return false;
        }
      }
      const Edge b = g.edge(n.bridge);
      edges.emplace_back(std::min(b.u, b.v), std::max(b.u, b.v));
      for (VertexId w : n.attach_left) edges.emplace_back(std::min(w, b.u), std::max(w, b.u));
      for (VertexId w : n.attach_right) edges.emplace_back(std::min(w, b.v), std::max(w, b.v));
      matched.push_back(n.bridge);
      verts.insert(verts.end(), l.begin(), l.end());
      verts.insert(verts.end(), r.begin(), r.end());
      verts.push_back(b.u);
      verts.push_back(b.v);
      return true;
    }
  }
  return false;
}

}  // namespace

UpmSequentialization upm_sequentialize(const Graph& g, const Matching& m) {
  RecomputingBridgeOracle oracle(g);
  return upm_sequentialize(g, m, oracle);
}

UpmSequentialization upm_sequentialize(const Graph& g, const Matching& m, BridgeOracle& oracle) {
  require_perfect(g, m);
  std::vector<VertexId> everything(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) everything[static_cast<std::size_t>(v)] = v;
  Sequentializer seq(g, m, oracle);
  UpmSequentialization out;
  try {
    const int root = seq.build(everything);
    out.derivation = seq.take();
    out.derivation->root = root;
  } catch (const Stuck& stuck) {
    // No matching bridge: by Kotzig the piece carries an alternating cycle.
    EdgeMask inside(g.edge_count(), false);
    for (VertexId v : stuck.piece) {
      for (const Incidence& inc : g.incident(v)) {
        if (oracle.present()[inc.edge]) inside.set(inc.edge, true);
      }
    }
    UniquenessVerdict verdict = is_unique_pm(g, inside, m);
    if (verdict.unique) {
      throw Error(ErrorCode::PreconditionViolated, "component without matching bridge has no alternating cycle");
    }
    out.witness = std::move(verdict.witness);
  }
  return out;
}

std::vector<UpmDerivation> enumerate_upm_derivations(const Graph& g, const Matching& m, std::size_t cap) {
  require_perfect(g, m);
  std::vector<VertexId> everything(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) everything[static_cast<std::size_t>(v)] = v;
  Enumerator en(g, m, cap);
  return en.all(everything, EdgeMask::all(g));
}

bool replays_to(const UpmDerivation& d, const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count()) return false;
  std::vector<std::uint8_t> visited(d.nodes.size(), 0);
  std::vector<VertexId> verts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<EdgeId> matched;
  if (!replay(d, d.root, g, m, visited, verts, edges, matched)) return false;
  std::sort(verts.begin(), verts.end());
  if (verts.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] != static_cast<VertexId>(i)) return false;
  }
  std::vector<std::pair<VertexId, VertexId>> host;
  for (const Edge& e : g.edges()) host.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(host.begin(), host.end());
  std::sort(edges.begin(), edges.end());
  std::sort(matched.begin(), matched.end());
  return host == edges && std::equal(matched.begin(), matched.end(), m.edges().begin(), m.edges().end());
}

bool is_matching_bridge_by_parity(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::InvalidInput, "edge id out of range");
  auto all = bridges(g);
  if (!std::binary_search(all.begin(), all.end(), e)) {
    throw Error(ErrorCode::NotABridge, "edge " + std::to_string(e) + " is not a bridge");
  }
  EdgeMask mask = EdgeMask::all(g);
  mask.set(e, false);
  const Components c = connected_components(g, mask);
  const auto sizes = c.sizes();
  const Edge& ed = g.edge(e);
  return sizes[static_cast<std::size_t>(c.label[static_cast<std::size_t>(ed.u)])] % 2 == 1 &&
         sizes[static_cast<std::size_t>(c.label[static_cast<std::size_t>(ed.v)])] % 2 == 1;
}

}  // namespace upmnet
