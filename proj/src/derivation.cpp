#include "upmnet/derivation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace upmnet {

std::string to_string(DerivationNode::Rule r) {
  switch (r) {
    case DerivationNode::Rule::Ax: return "ax";
    case DerivationNode::Rule::Tensor: return "tensor";
    case DerivationNode::Rule::Par: return "par";
    case DerivationNode::Rule::Mix: return "mix";
  }
  return "?";
}

int Derivation::count(DerivationNode::Rule r) const {
  if (root < 0) return 0;
  int total = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const DerivationNode& n = at(stack.back());
    stack.pop_back();
    if (n.rule == r) ++total;
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  return total;
}

std::vector<LinkId> Derivation::links_below(int i) const {
  std::vector<LinkId> out;
  std::vector<int> stack;
  if (at(i).left >= 0) stack.push_back(at(i).left);
  if (at(i).right >= 0) stack.push_back(at(i).right);
  while (!stack.empty()) {
    const DerivationNode& n = at(stack.back());
    stack.pop_back();
    if (n.rule != DerivationNode::Rule::Mix) out.push_back(n.link);
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool structurally_equal(const Derivation& a, const Derivation& b) {
  std::function<bool(int, int)> same = [&](int x, int y) {
    if (x < 0 || y < 0) return x == y;
    const DerivationNode& p = a.at(x);
    const DerivationNode& q = b.at(y);
    return p.rule == q.rule && p.link == q.link && same(p.left, q.left) && same(p.right, q.right);
  };
  return same(a.root, b.root);
}

namespace {

using Rule = DerivationNode::Rule;

class Replay {
 public:
  Replay(const ProofStructure& ps, const Derivation& d)
      : ps_(ps), d_(d), visited_(d.nodes.size(), 0), owner_(static_cast<std::size_t>(ps.link_count()), -1) {}

  bool run() {
    if (!walk(d_.root)) return false;
    return std::all_of(owner_.begin(), owner_.end(), [](int o) { return o >= 0; });
  }

 private:
  // Each link records the node that introduced it; `inside(l, i)` then asks
  // whether that node lies in the subtree of i via the parent chain.
  bool walk(int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= d_.nodes.size() || visited_[static_cast<std::size_t>(i)]) {
      return false;
    }
    visited_[static_cast<std::size_t>(i)] = 1;
    if (parent_.size() < d_.nodes.size()) parent_.assign(d_.nodes.size(), -1);
    const DerivationNode& n = d_.at(i);
    const bool binary = n.rule == Rule::Tensor || n.rule == Rule::Mix;
    const bool unary = n.rule == Rule::Par;
    if (n.rule == Rule::Ax && (n.left >= 0 || n.right >= 0)) return false;
    if (unary && (n.left < 0 || n.right >= 0)) return false;
    if (binary && (n.left < 0 || n.right < 0)) return false;
    for (int c : {n.left, n.right}) {
      if (c < 0) continue;
      if (c >= static_cast<int>(d_.nodes.size())) return false;
      parent_[static_cast<std::size_t>(c)] = i;
      if (!walk(c)) return false;
    }
    if (n.rule == Rule::Mix) return true;
    if (n.link < 0 || n.link >= ps_.link_count() || owner_[static_cast<std::size_t>(n.link)] >= 0) return false;
    const LinkKind k = ps_.kind(n.link);
    if ((n.rule == Rule::Ax) != (k == LinkKind::Ax) || (n.rule == Rule::Tensor) != (k == LinkKind::Tensor) ||
        (n.rule == Rule::Par) != (k == LinkKind::Par)) {
      return false;
    }
    owner_[static_cast<std::size_t>(n.link)] = i;
    auto in = ps_.in_edges(n.link);
    if (n.rule == Rule::Tensor) {
      return inside(ps_.edge(in[0]).source, n.left) && inside(ps_.edge(in[1]).source, n.right);
    }
    if (n.rule == Rule::Par) {
      return inside(ps_.edge(in[0]).source, n.left) && inside(ps_.edge(in[1]).source, n.left);
    }
    return true;
  }

  bool inside(LinkId l, int sub) const {
    int at = owner_[static_cast<std::size_t>(l)];
    while (at >= 0) {
      if (at == sub) return true;
      at = parent_[static_cast<std::size_t>(at)];
    }
    return false;
  }

  const ProofStructure& ps_;
  const Derivation& d_;
  std::vector<std::uint8_t> visited_;
  std::vector<int> owner_;
  std::vector<int> parent_;
};

}  // namespace

bool validate_derivation(const ProofStructure& ps, const Derivation& d) {
  return Replay(ps, d).run();
}

std::string pretty_print(const ProofStructure& ps, const Derivation& d) {
  std::ostringstream out;
  std::function<void(int, int)> show = [&](int i, int depth) {
    const DerivationNode& n = d.at(i);
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << to_string(n.rule);
    if (n.rule != Rule::Mix) {
      out << ' ' << n.link;
      if (n.rule != Rule::Ax && n.link >= 0 && n.link < ps.link_count()) {
        out << " <-";
        for (int e : ps.in_edges(n.link)) out << ' ' << ps.edge(e).source;
      }
    }
    out << '\n';
    if (n.left >= 0) show(n.left, depth + 1);
    if (n.right >= 0) show(n.right, depth + 1);
  };
  if (d.root >= 0) show(d.root, 0);
  return out.str();
}

}  // namespace upmnet
