#include "edmonds.hpp"

#include "upmnet/error.hpp"

namespace upmnet::detail {

namespace {
constexpr int kEven = 1;
constexpr int kOdd = 2;
}  // namespace

AugmentingSearch::AugmentingSearch(const Graph& g, const EdgeMask* present)
    : g_(g), present_(present) {
  const auto n = static_cast<std::size_t>(g.vertex_count()) + 1;
  match_.assign(n, 0);
  pre_.assign(n, 0);
  fa_.assign(n, 0);
  label_.assign(n, 0);
  stamp_.assign(n, 0);
  queue_.reserve(n);
}

int AugmentingSearch::find(int x) {
  while (fa_[static_cast<std::size_t>(x)] != x) {
    auto& f = fa_[static_cast<std::size_t>(x)];
    f = fa_[static_cast<std::size_t>(f)];
    x = f;
  }
  return x;
}

int AugmentingSearch::lca(int x, int y) {
  ++clock_;
  x = find(x);
  y = find(y);
  for (;;) {
    if (x != 0) {
      if (stamp_[static_cast<std::size_t>(x)] == clock_) return x;
      stamp_[static_cast<std::size_t>(x)] = clock_;
      const int m = match_[static_cast<std::size_t>(x)];
      x = m == 0 ? 0 : find(pre_[static_cast<std::size_t>(m)]);
    }
    std::swap(x, y);
  }
}

void AugmentingSearch::shrink(int x, int y, int base) {
  while (find(x) != base) {
    pre_[static_cast<std::size_t>(x)] = y;
    y = match_[static_cast<std::size_t>(x)];
    if (label_[static_cast<std::size_t>(y)] == kOdd) {
      label_[static_cast<std::size_t>(y)] = kEven;
      queue_.push_back(y);
    }
    if (find(x) == x) fa_[static_cast<std::size_t>(x)] = base;
    if (find(y) == y) fa_[static_cast<std::size_t>(y)] = base;
    x = pre_[static_cast<std::size_t>(y)];
  }
}

std::optional<std::vector<VertexId>> AugmentingSearch::find_from(VertexId root,
                                                                 const std::vector<VertexId>& mate) {
  const int n = g_.vertex_count();
  for (int i = 0; i <= n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    fa_[s] = i;
    pre_[s] = 0;
    label_[s] = 0;
    match_[s] = i == 0 ? 0 : mate[s - 1] + 1;
  }
  if (match_[static_cast<std::size_t>(root) + 1] != 0) {
    throw Error(ErrorCode::PreconditionViolated, "augmenting search root is matched");
  }
  queue_.clear();
  queue_.push_back(root + 1);
  label_[static_cast<std::size_t>(root) + 1] = kEven;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int u = queue_[head];
    for (const Incidence& inc : g_.incident(u - 1)) {
      if (present_ && !(*present_)[inc.edge]) continue;
      const int v = inc.neighbor + 1;
      const auto sv = static_cast<std::size_t>(v);
      if (find(u) == find(v) || label_[sv] == kOdd) continue;
      if (label_[sv] == 0) {
        label_[sv] = kOdd;
        pre_[sv] = u;
        if (match_[sv] == 0) {
          std::vector<VertexId> path;
          for (int x = v; x != 0;) {
            const int p = pre_[static_cast<std::size_t>(x)];
            path.push_back(x - 1);
            path.push_back(p - 1);
            x = match_[static_cast<std::size_t>(p)];
          }
          return path;
        }
        label_[static_cast<std::size_t>(match_[sv])] = kEven;
        queue_.push_back(match_[sv]);
      } else {
        const int base = lca(u, v);
        shrink(u, v, base);
        shrink(v, u, base);
      }
    }
  }
  return std::nullopt;
}

void augment(std::vector<VertexId>& mate, const std::vector<VertexId>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
    mate[static_cast<std::size_t>(path[i])] = path[i + 1];
    mate[static_cast<std::size_t>(path[i + 1])] = path[i];
  }
}

std::vector<EdgeId> path_edges(const Graph& g, const std::vector<VertexId>& path) {
  std::vector<EdgeId> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto e = g.find_edge(path[i], path[i + 1]);
    if (!e) throw Error(ErrorCode::InvalidInput, "path step is not an edge");
    out.push_back(*e);
  }
  return out;
}

}  // namespace upmnet::detail
