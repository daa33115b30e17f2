#include "upmnet/dot.hpp"

#include <sstream>

namespace upmnet {

namespace {

const char* symbol(LinkKind k) {
  switch (k) {
    case LinkKind::Ax: return "ax";
    case LinkKind::Tensor: return "⊗";
    case LinkKind::Par: return "⅋";
  }
  return "?";
}

}  // namespace

std::string to_dot(const ProofStructure& ps) {
  std::ostringstream out;
  out << "digraph net {\n  rankdir=TB;\n  node [shape=box];\n";
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    out << "  l" << l << " [label=\"" << symbol(ps.kind(l)) << ' ' << l << "\"];\n";
  }
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    auto in = ps.in_edges(l);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Arc& a = ps.edge(in[i]);
      out << "  l" << a.source << " -> l" << a.target << " [label=\"" << in[i] << "\", headlabel=\"" << (i + 1)
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, const Matching& m) {
  std::ostringstream out;
  out << "graph g {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  v" << g.edge(e).u << " -- v" << g.edge(e).v << " [label=\"" << e << "\"";
    if (m.contains(e)) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g) { return to_dot(g, Matching()); }

std::string hasse_dot(const ProofStructure& ps, const KingdomOrder& k) {
  std::ostringstream out;
  out << "digraph kingdom {\n  rankdir=TB;\n  node [shape=box];\n";
  for (LinkId l = 0; l < ps.link_count(); ++l) {
    out << "  l" << l << " [label=\"" << symbol(ps.kind(l)) << ' ' << l << "\"];\n";
  }
  for (auto [p, q] : k.order.pairs()) {
    bool covers = true;
    for (LinkId r = 0; r < ps.link_count() && covers; ++r) {
      covers = !(k.precedes(p, r) && k.precedes(r, q));
    }
    if (covers) out << "  l" << p << " -> l" << q << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace upmnet
