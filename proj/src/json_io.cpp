#include "upmnet/json_io.hpp"

#include <string>

#include "upmnet/error.hpp"

namespace upmnet {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto x = j.get<std::int64_t>();
  if (x < -1 || x > (1 << 30)) bad(std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

std::pair<int, int> int_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be a pair");
  return {as_int(j[0], what), as_int(j[1], what)};
}

// Runs a library constructor, reporting its complaint as bad input.
template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    bad(e.what());
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j, bool allow_parallel) {
  const int n = as_int(field(j, "vertices"), "vertices");
  if (n < 0) bad("vertices must be non-negative");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  Graph g(n, allow_parallel);
  for (const Json& e : edges) {
    auto [u, v] = int_pair(e, "edge");
    if (u < 0 || v < 0 || u >= n || v >= n) bad("edge endpoint out of range");
    guarded([&] { return g.add_edge(u, v); });
  }
  return g;
}

Json to_json(const Graph& g, const Matching& m) {
  Json j = to_json(g);
  j["matching"] = std::vector<int>(m.edges().begin(), m.edges().end());
  return j;
}

Matching matching_from_json(const Json& j, const Graph& g) {
  auto ids = int_list(field(j, "matching"), "matching");
  return guarded([&] { return Matching(g, ids); });
}

Json to_json(const ProofStructure& ps) {
  Json links = Json::array();
  for (LinkId l = 0; l < ps.link_count(); ++l) links.push_back({{"id", l}, {"kind", std::string(to_string(ps.kind(l)))}});
  Json edges = Json::array();
  for (const Arc& a : ps.edges()) edges.push_back({a.source, a.target});
  return {{"links", links}, {"edges", edges}};
}

RawProofStructure raw_from_json(const Json& j) {
  const Json& links = field(j, "links");
  if (!links.is_array()) bad("links must be an array");
  RawProofStructure raw;
  raw.links.resize(links.size(), LinkKind::Ax);
  std::vector<std::uint8_t> seen(links.size(), 0);
  for (const Json& l : links) {
    const int id = as_int(field(l, "id"), "link id");
    if (id < 0 || static_cast<std::size_t>(id) >= links.size() || seen[static_cast<std::size_t>(id)]) {
      bad("link ids must be 0..n-1 without repeats");
    }
    seen[static_cast<std::size_t>(id)] = 1;
    const Json& k = field(l, "kind");
    if (!k.is_string()) bad("link kind must be a string");
    const auto s = k.get<std::string>();
    if (s == "ax") {
      raw.links[static_cast<std::size_t>(id)] = LinkKind::Ax;
    } else if (s == "tensor") {
      raw.links[static_cast<std::size_t>(id)] = LinkKind::Tensor;
    } else if (s == "par") {
      raw.links[static_cast<std::size_t>(id)] = LinkKind::Par;
    } else {
      bad("unknown link kind \"" + s + "\"");
    }
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const Json& e : edges) {
    auto [s, t] = int_pair(e, "edge");
    raw.edges.push_back({s, t});
  }
  return raw;
}

ProofStructure net_from_json(const Json& j) {
  RawProofStructure raw = raw_from_json(j);
  return guarded([&] { return ProofStructure(std::move(raw)); });
}

Json to_json(const Derivation& d) {
  Json nodes = Json::array();
  for (const DerivationNode& n : d.nodes) {
    Json x = {{"kind", to_string(n.rule)}};
    if (n.rule != DerivationNode::Rule::Mix) x["link"] = n.link;
    if (n.left >= 0) x["left"] = n.left;
    if (n.right >= 0) x["right"] = n.right;
    nodes.push_back(std::move(x));
  }
  return {{"root", d.root}, {"nodes", nodes}};
}

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  d.root = as_int(field(j, "root"), "root");
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("nodes must be an array");
  for (const Json& x : nodes) {
    DerivationNode n;
    const Json& k = field(x, "kind");
    const std::string s = k.is_string() ? k.get<std::string>() : "";
    if (s == "ax") {
      n.rule = DerivationNode::Rule::Ax;
    } else if (s == "tensor") {
      n.rule = DerivationNode::Rule::Tensor;
    } else if (s == "par") {
      n.rule = DerivationNode::Rule::Par;
    } else if (s == "mix") {
      n.rule = DerivationNode::Rule::Mix;
    } else {
      bad("unknown rule \"" + s + "\"");
    }
    if (x.contains("link")) n.link = as_int(x["link"], "link");
    if (x.contains("left")) n.left = as_int(x["left"], "left");
    if (x.contains("right")) n.right = as_int(x["right"], "right");
    d.nodes.push_back(n);
  }
  if (d.root < 0 || static_cast<std::size_t>(d.root) >= d.nodes.size()) bad("root out of range");
  return d;
}

Json to_json(const UpmDerivation& d) {
  Json nodes = Json::array();
  for (const UpmNode& n : d.nodes) {
    Json x;
    switch (n.kind) {
      case UpmNode::Kind::Empty: x["kind"] = "empty"; break;
      case UpmNode::Kind::Union: x["kind"] = "union"; break;
      case UpmNode::Kind::Join:
        x["kind"] = "join";
        x["bridge"] = n.bridge;
        x["attach_left"] = n.attach_left;
        x["attach_right"] = n.attach_right;
        break;
    }
    if (n.left >= 0) x["left"] = n.left;
    if (n.right >= 0) x["right"] = n.right;
    nodes.push_back(std::move(x));
  }
  return {{"root", d.root}, {"nodes", nodes}};
}

UpmDerivation upm_derivation_from_json(const Json& j) {
  UpmDerivation d;
  d.root = as_int(field(j, "root"), "root");
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("nodes must be an array");
  for (const Json& x : nodes) {
    UpmNode n;
    const Json& k = field(x, "kind");
    const std::string s = k.is_string() ? k.get<std::string>() : "";
    if (s == "empty") {
      n.kind = UpmNode::Kind::Empty;
    } else if (s == "union") {
      n.kind = UpmNode::Kind::Union;
    } else if (s == "join") {
      n.kind = UpmNode::Kind::Join;
      n.bridge = as_int(field(x, "bridge"), "bridge");
      n.attach_left = int_list(field(x, "attach_left"), "attach_left");
      n.attach_right = int_list(field(x, "attach_right"), "attach_right");
    } else {
      bad("unknown node kind \"" + s + "\"");
    }
    if (x.contains("left")) n.left = as_int(x["left"], "left");
    if (x.contains("right")) n.right = as_int(x["right"], "right");
    d.nodes.push_back(std::move(n));
  }
  if (d.root < 0 || static_cast<std::size_t>(d.root) >= d.nodes.size()) bad("root out of range");
  return d;
}

Json to_json(const TransitionSystem& t) {
  Json per = Json::array();
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    Json list = Json::array();
    for (auto [e, f] : t.allowed(v)) list.push_back({e, f});
    per.push_back(std::move(list));
  }
  return {{"transitions", per}};
}

TransitionSystem transitions_from_json(const Json& j, const Graph& g) {
  const Json& per = field(j, "transitions");
  if (!per.is_array()) bad("transitions must be an array");
  std::vector<std::vector<TransitionSystem::Pair>> all;
  for (const Json& list : per) {
    if (!list.is_array()) bad("transitions of a vertex must be an array");
    all.emplace_back();
    for (const Json& p : list) all.back().push_back(int_pair(p, "transition"));
  }
  return guarded([&] { return TransitionSystem(g, all); });
}

PairedGraph paired_graph_from_json(const Json& j) {
  Graph g = graph_from_json(j, true);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  const Json& ps = field(j, "pairs");
  if (!ps.is_array()) bad("pairs must be an array");
  for (const Json& p : ps) pairs.push_back(int_pair(p, "pair"));
  std::vector<VertexId> meet;
  if (j.contains("pair_vertices")) meet = int_list(j["pair_vertices"], "pair_vertices");
  return guarded([&] { return PairedGraph::make(std::move(g), pairs, meet); });
}

Json to_json(const AlternatingCycle& c) { return {{"vertices", c.vertices}, {"edges", c.edges}}; }

Json to_json(const SwitchingCycle& c) { return {{"links", c.links}, {"edges", c.edges}}; }

SwitchingCycle switching_cycle_from_json(const Json& j) {
  return {int_list(field(j, "links"), "links"), int_list(field(j, "edges"), "edges")};
}

Json to_json(const ClosedTrail& t) { return {{"vertices", t.vertices}, {"edges", t.edges}}; }

ClosedTrail trail_from_json(const Json& j) {
  ClosedTrail t;
  t.vertices = int_list(field(j, "vertices"), "vertices");
  t.edges = int_list(field(j, "edges"), "edges");
  return t;
}

Json to_json(const Relation& r) {
  Json out = Json::array();
  for (auto [a, b] : r.pairs()) out.push_back({a, b});
  return out;
}

Relation relation_from_json(const Json& j, int universe) {
  if (!j.is_array()) bad("relation must be an array of pairs");
  Relation r(universe);
  for (const Json& p : j) {
    auto [a, b] = int_pair(p, "relation pair");
    if (a < 0 || b < 0 || a >= universe || b >= universe) bad("relation pair out of range");
    r.insert(a, b);
  }
  return r;
}

}  // namespace upmnet
