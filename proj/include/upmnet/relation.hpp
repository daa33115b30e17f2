#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace upmnet {

/// Binary relation on {0, ..., universe - 1}, kept as a sorted pair list.
class Relation {
 public:
  using Pair = std::pair<int, int>;

  Relation() = default;
  explicit Relation(int universe) : universe_(universe) {}
  Relation(int universe, std::vector<Pair> pairs);

  int universe() const { return universe_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  void insert(int a, int b);
  bool contains(int a, int b) const;

  Relation united(const Relation& other) const;
  /// Closure by repeated squaring over bitset rows.
  Relation transitive_closure() const;

  bool is_irreflexive() const;
  bool is_transitive() const;

  bool operator==(const Relation&) const = default;

 private:
  int universe_ = 0;
  std::vector<Pair> pairs_;
};

}  // namespace upmnet
