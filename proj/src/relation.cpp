#include "upmnet/relation.hpp"

#include <algorithm>
#include <cstdint>

#include "upmnet/error.hpp"

namespace upmnet {

namespace {

using Row = std::vector<std::uint64_t>;

std::vector<Row> to_rows(const Relation& r) {
  const auto words = static_cast<std::size_t>((r.universe() + 63) / 64);
  std::vector<Row> rows(static_cast<std::size_t>(r.universe()), Row(words, 0));
  for (auto [a, b] : r.pairs()) {
    rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
  }
  return rows;
}

}  // namespace

Relation::Relation(int universe, std::vector<Pair> pairs) : universe_(universe), pairs_(std::move(pairs)) {
  for (auto [a, b] : pairs_) {
    if (a < 0 || b < 0 || a >= universe_ || b >= universe_) {
      throw Error(ErrorCode::InvalidInput, "relation pair outside its universe");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

void Relation::insert(int a, int b) {
  if (a < 0 || b < 0 || a >= universe_ || b >= universe_) {
    throw Error(ErrorCode::InvalidInput, "relation pair outside its universe");
  }
  const Pair p{a, b};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

bool Relation::contains(int a, int b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

Relation Relation::united(const Relation& other) const {
  std::vector<Pair> all = pairs_;
  all.insert(all.end(), other.pairs_.begin(), other.pairs_.end());
  return Relation(std::max(universe_, other.universe_), std::move(all));
}

Relation Relation::transitive_closure() const {
  std::vector<Row> rows = to_rows(*this);
  const auto n = rows.size();
  // Each round doubles the path length covered: R <- R | R.R.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Row> next = rows;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!((rows[a][b / 64] >> (b % 64)) & 1U)) continue;
        for (std::size_t w = 0; w < rows[a].size(); ++w) {
          const std::uint64_t add = rows[b][w] & ~next[a][w];
          if (add) {
            next[a][w] |= add;
            changed = true;
          }
        }
      }
    }
    rows = std::move(next);
  }
  Relation out(universe_);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((rows[a][b / 64] >> (b % 64)) & 1U) out.pairs_.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return out;
}

bool Relation::is_irreflexive() const {
  return std::none_of(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.first == p.second; });
}

bool Relation::is_transitive() const { return transitive_closure() == *this; }

}  // namespace upmnet
