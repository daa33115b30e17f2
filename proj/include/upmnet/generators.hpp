#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "upmnet/graph.hpp"
#include "upmnet/proof_structure.hpp"

namespace upmnet {

/// 64-bit Mersenne Twister with integer-only draws, so a seed reproduces the
/// same instance on every platform (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); rejection sampling, n > 0.
  std::uint64_t below(std::uint64_t n);
  int index(std::size_t n) { return static_cast<int>(below(n)); }
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::mt19937_64 engine_;
};

struct NetParams {
  int size = 10;          // upper bound on the link count
  bool mll = false;       // no Mix; the result is connected
  int max_pars = 1 << 30;
  // Relative rule weights.
  int w_ax = 3;
  int w_tensor = 2;
  int w_par = 2;
  int w_mix = 1;
};

/// Replays random sequent rules, so the result is always a proof net. In MLL
/// mode the remaining pieces are joined by tensors at the end.
ProofStructure generate_correct_net(Rng& rng, const NetParams& params);

/// Moves the source of one random premise edge to another link with a free
/// conclusion, keeping the structure acyclic. Returns ps unchanged when no
/// move exists.
ProofStructure rewire_premise(Rng& rng, const ProofStructure& ps);

struct GeneratedUpm {
  Graph graph;
  Matching matching;
};

/// Random unique-perfect-matching instance with `pairs` matching edges built
/// from Unions and Joins; vertex and edge ids are shuffled afterwards.
GeneratedUpm generate_upm(Rng& rng, int pairs);

/// Each edge present with probability permille / 1000.
Graph random_graph(Rng& rng, int vertices, int permille);

}  // namespace upmnet
