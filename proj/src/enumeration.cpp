#include <algorithm>
#include <string>

#include "upmnet/error.hpp"
#include "upmnet/sequentialization.hpp"

namespace upmnet {

namespace {

using Rule = DerivationNode::Rule;

int graft(Derivation& dst, const Derivation& src, int i) {
  DerivationNode n = src.at(i);
  if (n.left >= 0) n.left = graft(dst, src, n.left);
  if (n.right >= 0) n.right = graft(dst, src, n.right);
  return dst.add(n);
}

class Enumerator {
 public:
  Enumerator(const ProofStructure& ps, std::size_t cap)
      : ps_(ps), cap_(cap), in_set_(static_cast<std::size_t>(ps.link_count()), 0),
        label_(static_cast<std::size_t>(ps.link_count()), -1) {}

  std::vector<Derivation> all(const std::vector<LinkId>& s) {
    auto parts = components(s);
    if (parts.size() > 1) {
      std::vector<Derivation> acc = all(parts[0]);
      for (std::size_t i = 1; i < parts.size() && !acc.empty(); ++i) {
        acc = combine(acc, all(parts[i]), {Rule::Mix, -1, -1, -1});
      }
      return acc;
    }
    std::vector<Derivation> out;
    for (LinkId l : s) {
      if (!terminal_in(l, s)) continue;
      std::vector<LinkId> rest;
      for (LinkId x : s) {
        if (x != l) rest.push_back(x);
      }
      switch (ps_.kind(l)) {
        case LinkKind::Ax:
          if (s.size() == 1) {
            Derivation d;
            d.root = d.add({Rule::Ax, l, -1, -1});
            out.push_back(std::move(d));
          }
          break;
        case LinkKind::Par:
          for (const Derivation& p : all(rest)) {
            Derivation d;
            const int below = graft(d, p, p.root);
            d.root = d.add({Rule::Par, l, below, -1});
            out.push_back(std::move(d));
          }
          break;
        case LinkKind::Tensor: {
          auto sides = components(rest);
          if (sides.size() != 2) break;
          const LinkId first = ps_.edge(ps_.in_edges(l)[0]).source;
          const bool flipped = std::find(sides[0].begin(), sides[0].end(), first) == sides[0].end();
          auto joined = combine(all(sides[flipped ? 1 : 0]), all(sides[flipped ? 0 : 1]), {Rule::Tensor, l, -1, -1});
          for (auto& d : joined) out.push_back(std::move(d));
          break;
        }
      }
      check(out.size());
    }
    return out;
  }

 private:
  bool terminal_in(LinkId l, const std::vector<LinkId>& s) {
    mark(s, 1);
    bool terminal = true;
    for (int e : ps_.out_edges(l)) terminal = terminal && !in_set_[static_cast<std::size_t>(ps_.edge(e).target)];
    mark(s, 0);
    return terminal;
  }

  void mark(const std::vector<LinkId>& s, std::uint8_t v) {
    for (LinkId x : s) in_set_[static_cast<std::size_t>(x)] = v;
  }

  // Weak components of the links in s, each sorted, ordered by smallest link.
  std::vector<std::vector<LinkId>> components(const std::vector<LinkId>& s) {
    mark(s, 1);
    std::vector<std::vector<LinkId>> out;
    for (LinkId start : s) {
      if (label_[static_cast<std::size_t>(start)] >= 0) continue;
      const int id = static_cast<int>(out.size());
      std::vector<LinkId> comp{start};
      label_[static_cast<std::size_t>(start)] = id;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        const LinkId x = comp[h];
        auto visit = [&](LinkId y) {
          if (!in_set_[static_cast<std::size_t>(y)] || label_[static_cast<std::size_t>(y)] >= 0) return;
          label_[static_cast<std::size_t>(y)] = id;
          comp.push_back(y);
        };
        for (int e : ps_.in_edges(x)) visit(ps_.edge(e).source);
        for (int e : ps_.out_edges(x)) visit(ps_.edge(e).target);
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    for (LinkId x : s) label_[static_cast<std::size_t>(x)] = -1;
    mark(s, 0);
    return out;
  }

  std::vector<Derivation> combine(const std::vector<Derivation>& ls, const std::vector<Derivation>& rs,
                                  DerivationNode top) {
    check(ls.size() * rs.size());
    std::vector<Derivation> out;
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        Derivation d;
        DerivationNode n = top;
        n.left = graft(d, l, l.root);
        n.right = graft(d, r, r.root);
        d.root = d.add(n);
        out.push_back(std::move(d));
      }
    }
    return out;
  }

  void check(std::size_t n) const {
    if (n > cap_) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " sequentializations");
  }

  const ProofStructure& ps_;
  std::size_t cap_;
  std::vector<std::uint8_t> in_set_;
  std::vector<int> label_;
};

}  // namespace

std::vector<Derivation> enumerate_sequentializations(const ProofStructure& ps, std::size_t cap) {
  std::vector<LinkId> everything(static_cast<std::size_t>(ps.link_count()));
  for (LinkId l = 0; l < ps.link_count(); ++l) everything[static_cast<std::size_t>(l)] = l;
  return Enumerator(ps, cap).all(everything);
}

}  // namespace upmnet
