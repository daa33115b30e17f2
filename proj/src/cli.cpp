#include "upmnet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "upmnet/dot.hpp"
#include "upmnet/error.hpp"
#include "upmnet/generators.hpp"
#include "upmnet/json_io.hpp"
#include "upmnet/kingdom.hpp"
#include "upmnet/matching.hpp"
#include "upmnet/sequentialization.hpp"
#include "upmnet/switching.hpp"
#include "upmnet/transitions.hpp"
#include "upmnet/translations.hpp"

namespace upmnet {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string input = "-";
  std::string mode = "mix";
  std::string to;
  std::string kind = "net";
  std::string gen_mode = "correct";
  int size = 10;
  std::uint64_t seed = 1;
  std::size_t cap = 100000;
  std::string dot;
  bool pretty = false;
  bool all = false;
  bool crosscheck = false;
};

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  int check() {
    const ProofStructure ps = net_from_json(read());
    write_dot(to_dot(ps));
    const MatchedGraph gf = graphification(ps);
    const UniquenessVerdict v = is_unique_pm(gf.graph, gf.matching);
    Json j;
    if (!v.unique) {
      j["correct"] = false;
      j["witness"] = to_json(alternating_to_switching(ps, gf, *v.witness));
      return emit(j, kNegative);
    }
    const int k = euler_characteristic(ps);
    const bool ok = o_.mode == "mix" || k == 1;
    j["correct"] = ok;
    j["mix_count"] = k;
    if (!ok) j["disconnected"] = true;
    return emit(j, ok ? kOk : kNegative);
  }

  int seq() {
    const ProofStructure ps = net_from_json(read());
    write_dot(to_dot(ps));
    const SequentializationResult r = mix_sequentialize(ps);
    if (r.correct() && o_.pretty) {
      out_ << pretty_print(ps, *r.derivation);
      return kOk;
    }
    Json j{{"correct", r.correct()}, {"net", to_json(ps)}};
    if (r.correct()) {
      j["derivation"] = to_json(*r.derivation);
      return emit(j, kOk);
    }
    j["witness"] = to_json(*r.witness);
    return emit(j, kNegative);
  }

  int kingdom() {
    const ProofStructure ps = net_from_json(read());
    if (!is_mix_correct(ps)) return emit({{"correct", false}}, kNegative);
    const KingdomOrder k = kingdom_order(ps);
    write_dot(hasse_dot(ps, k));
    Json j{{"correct", true},
           {"net", to_json(ps)},
           {"order", to_json(k.order)},
           {"generators", to_json(k.generators)},
           {"dependencies", to_json(dependency_relation(ps))},
           {"maximal", k.maximal()}};
    const auto top = k.greatest();
    j["greatest"] = top ? Json(*top) : Json(nullptr);
    if (o_.crosscheck) j["agrees_with_enumeration"] = kingdom_order_bruteforce(ps, o_.cap) == k;
    return emit(j, kOk);
  }

  int translate() {
    const Json doc = read();
    if (o_.to == "rb" || o_.to == "graphify") {
      const ProofStructure ps = net_from_json(doc);
      const MatchedGraph mg = o_.to == "rb" ? rb_graph(add_conclusions(ps)) : graphification(ps);
      write_dot(to_dot(mg.graph, mg.matching));
      return emit(to_json(mg.graph, mg.matching), kOk);
    }
    if (o_.to == "proofify") {
      const Graph g = graph_from_json(doc);
      const Proofification p = proofification(g, matching_from_json(doc, g));
      write_dot(to_dot(p.net));
      return emit(to_json(p.net), kOk);
    }
    const auto [g, t] = graph_with_transitions(doc);
    const MatchedGraph mg = pm_line_graph(g, t);
    write_dot(to_dot(mg.graph, mg.matching));
    return emit(to_json(mg.graph, mg.matching), kOk);
  }

  int trail() {
    const Json doc = read();
    const auto [g, t] = graph_with_transitions(doc);
    write_dot(to_dot(g));
    Json j = to_json(g);
    j.update(to_json(t));
    if (o_.all) {
      Json list = Json::array();
      for (const ClosedTrail& c : brute_force_closed_trails(g, t, o_.cap)) list.push_back(to_json(c));
      const bool any = !list.empty();
      j["trails"] = std::move(list);
      return emit(j, any ? kOk : kNegative);
    }
    const auto c = find_compatible_closed_trail(g, t);
    j["trail"] = c ? to_json(*c) : Json(nullptr);
    return emit(j, c ? kOk : kNegative);
  }

  int gen() {
    Rng rng(o_.seed);
    if (o_.kind == "upm") {
      const GeneratedUpm u = generate_upm(rng, o_.size);
      write_dot(to_dot(u.graph, u.matching));
      return emit(to_json(u.graph, u.matching), kOk);
    }
    if (o_.kind == "graph") {
      if (o_.size < 0) throw Error(ErrorCode::InvalidInput, "negative size");
      const Graph g = random_graph(rng, o_.size, 300);
      write_dot(to_dot(g));
      return emit(to_json(g), kOk);
    }
    NetParams p;
    p.size = o_.size;
    p.mll = o_.gen_mode == "mll";
    ProofStructure ps = generate_correct_net(rng, p);
    if (o_.gen_mode == "rewired") ps = rewire_premise(rng, ps);
    write_dot(to_dot(ps));
    return emit(to_json(ps), kOk);
  }

  int validate() {
    const Json doc = read();
    Json report{{"problems", Json::array()}};
    auto problem = [&](const std::string& s) { report["problems"].push_back(s); };
    auto guard = [&](auto f) {
      try {
        f();
      } catch (const Error& e) {
        problem(e.what());
      }
    };
    std::string kind = "unknown";
    if (doc.is_object() && doc.contains("links")) {
      kind = "net";
      guard([&] {
        for (const Violation& v : ProofStructure::validate(raw_from_json(doc)).violations) problem(v.message());
      });
    } else if (doc.is_object() && doc.contains("correct")) {
      kind = "verdict";
      guard([&] { validate_verdict(doc, problem); });
    } else if (doc.is_object() && doc.contains("vertices")) {
      kind = "graph";
      guard([&] { validate_graph(doc, problem); });
    } else {
      problem("unrecognized document");
    }
    report["kind"] = kind;
    report["valid"] = report["problems"].empty();
    return emit(report, report["problems"].empty() ? kOk : kNegative);
  }

 private:
  template <class Problem>
  void validate_verdict(const Json& doc, Problem problem) {
    if (!doc["correct"].is_boolean()) return problem("\"correct\" must be a boolean");
    const bool correct = doc["correct"].get<bool>();
    std::optional<ProofStructure> ps;
    if (doc.contains("net")) ps = net_from_json(doc["net"]);
    if (doc.contains("mix_count") && (!doc["mix_count"].is_number_integer() || doc["mix_count"].get<int>() < 1)) {
      problem("mix_count must be a positive integer");
    }
    if (doc.contains("witness")) {
      if (correct) problem("a correct verdict carries no witness");
      const SwitchingCycle c = switching_cycle_from_json(doc["witness"]);
      if (ps && !is_switching_cycle(correctness_graph(*ps), c)) problem("witness is not a switching cycle");
    }
    if (doc.contains("derivation")) {
      if (!ps) return problem("derivation without its net");
      if (!validate_derivation(*ps, derivation_from_json(doc["derivation"]))) {
        problem("derivation does not rebuild the net");
      }
    }
    if (doc.contains("order")) {
      if (!ps) return problem("order without its net");
      const Relation r = relation_from_json(doc["order"], ps->link_count());
      if (!r.is_irreflexive() || !r.is_transitive()) problem("order is not a strict partial order");
      if (r != kingdom_order(*ps).order) problem("order differs from the recomputed one");
    }
  }

  template <class Problem>
  void validate_graph(const Json& doc, Problem problem) {
    if (doc.contains("pairs")) {
      paired_graph_from_json(doc);
      return;
    }
    const Graph g = graph_from_json(doc);
    if (doc.contains("matching")) matching_from_json(doc, g);
    if (doc.contains("transitions")) {
      const TransitionSystem t = transitions_from_json(doc, g);
      if (doc.contains("trail") && !doc["trail"].is_null() &&
          !is_compatible_closed_trail(g, t, trail_from_json(doc["trail"]))) {
        problem("trail is not a compatible closed trail");
      }
      if (doc.contains("trails")) {
        for (const Json& c : doc["trails"]) {
          if (!is_compatible_closed_trail(g, t, trail_from_json(c))) problem("listed trail is not compatible");
        }
      }
    }
  }

  std::pair<Graph, TransitionSystem> graph_with_transitions(const Json& doc) {
    if (doc.contains("pairs")) {
      PairedGraph pg = paired_graph_from_json(doc);
      TransitionSystem t = pairs_to_transitions(pg);
      return {std::move(pg.graph), std::move(t)};
    }
    Graph g = graph_from_json(doc, true);
    TransitionSystem t = doc.contains("transitions") ? transitions_from_json(doc, g) : TransitionSystem::complete(g);
    return {std::move(g), std::move(t)};
  }

  Json read() {
    std::string text;
    if (o_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream f(o_.input);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + o_.input);
      text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
  }

  void write_dot(const std::string& text) {
    if (o_.dot.empty()) return;
    std::ofstream f(o_.dot);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + o_.dot);
    f << text;
  }

  int emit(const Json& j, int status) {
    out_ << j.dump() << '\n';
    return status;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof-net correctness, sequentialization and kingdoms through unique perfect matchings", "upmnet"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c) { c->add_option("input", o.input, "JSON file, - for stdin"); };
  auto dot = [&](CLI::App* c) { c->add_option("--dot", o.dot, "also write a DOT file"); };

  CLI::App* check = app.add_subcommand("check", "correctness verdict with a switching-cycle witness");
  input(check);
  dot(check);
  check->add_option("--mode", o.mode, "mix or mll")->check(CLI::IsMember({"mix", "mll"}));

  CLI::App* seq = app.add_subcommand("seq", "sequentialize a net");
  input(seq);
  dot(seq);
  seq->add_flag("--pretty", o.pretty, "print the rule tree instead of JSON");

  CLI::App* kingdom = app.add_subcommand("kingdom", "kingdom ordering of a proof net");
  input(kingdom);
  dot(kingdom);
  kingdom->add_flag("--crosscheck", o.crosscheck, "compare with the order read off all sequentializations");
  kingdom->add_option("--cap", o.cap, "bound on enumerated sequentializations");

  CLI::App* translate = app.add_subcommand("translate", "translate between nets and matched graphs");
  input(translate);
  dot(translate);
  translate->add_option("--to", o.to, "rb, graphify, proofify or lpm")
      ->required()
      ->check(CLI::IsMember({"rb", "graphify", "proofify", "lpm"}));

  CLI::App* trail = app.add_subcommand("trail", "compatible closed trail under forbidden transitions");
  input(trail);
  dot(trail);
  trail->add_flag("--all", o.all, "list every trail by exhaustive search");
  trail->add_option("--cap", o.cap, "bound on listed trails");

  CLI::App* gen = app.add_subcommand("gen", "seeded random instance");
  dot(gen);
  gen->add_option("--kind", o.kind, "net, upm or graph")->check(CLI::IsMember({"net", "upm", "graph"}));
  gen->add_option("--mode", o.gen_mode, "for nets: correct, mll or rewired")
      ->check(CLI::IsMember({"correct", "mll", "rewired"}));
  gen->add_option("--size", o.size, "links, matching edges or vertices");
  gen->add_option("--seed", o.seed, "PRNG seed");

  CLI::App* validate = app.add_subcommand("validate", "check any document produced by this tool");
  input(validate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Runner r(o, in, out, err);
  try {
    if (check->parsed()) return r.check();
    if (seq->parsed()) return r.seq();
    if (kingdom->parsed()) return r.kingdom();
    if (translate->parsed()) return r.translate();
    if (trail->parsed()) return r.trail();
    if (gen->parsed()) return r.gen();
    return r.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::NotPerfect ? kBadInput : kNegative;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace upmnet
