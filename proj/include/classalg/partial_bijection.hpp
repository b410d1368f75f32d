#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "classalg/errors.hpp"

namespace classalg {

// A partial bijection from {1..source} to {1..target}: an injective map
// defined on a subset of the source segment. Stored as (x, y) pairs sorted by x.
class PartialBijection {
 public:
  PartialBijection(int source, int target, std::vector<std::pair<int, int>> pairs)
      : source_(source), target_(target), pairs_(std::move(pairs)) {
    if (source_ < 0 || target_ < 0) throw range_error("negative segment size");
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<char> used(static_cast<std::size_t>(target_), 0);
    int prev_x = 0;
    for (const auto& [x, y] : pairs_) {
      if (x < 1 || x > source_) throw range_error("source entry out of range");
      if (y < 1 || y > target_) throw range_error("target entry out of range");
      if (x == prev_x) throw duplicate_entry("repeated source entry");
      if (used[static_cast<std::size_t>(y - 1)]) throw duplicate_entry("repeated target entry");
      used[static_cast<std::size_t>(y - 1)] = 1;
      prev_x = x;
    }
  }

  static PartialBijection empty(int source, int target) {
    return PartialBijection(source, target, {});
  }

  static PartialBijection identity(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) pairs.emplace_back(j, j);
    return PartialBijection(n, n, std::move(pairs));
  }

  int source() const { return source_; }
  int target() const { return target_; }
  int rank() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  std::optional<int> apply(int x) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair<int, int>{x, 0});
    if (it != pairs_.end() && it->first == x) return it->second;
    return std::nullopt;
  }

  PartialBijection inverse() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairs_.size());
    for (const auto& [x, y] : pairs_) pairs.emplace_back(y, x);
    return PartialBijection(target_, source_, std::move(pairs));
  }

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
  friend std::strong_ordering operator<=>(const PartialBijection&, const PartialBijection&) = default;

 private:
  int source_, target_;
  std::vector<std::pair<int, int>> pairs_;
};

// (a * b)(w) = a(b(w)) where both sides are defined.
inline PartialBijection compose(const PartialBijection& a, const PartialBijection& b) {
  if (a.source() != b.target())
    throw size_mismatch("composing partial bijections with mismatched segments");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [w, y] : b.pairs())
    if (auto z = a.apply(y)) pairs.emplace_back(w, *z);
  return PartialBijection(b.source(), a.target(), std::move(pairs));
}

// The rank-n shift j -> j + k from {1..n} into {1..n+k}.
inline PartialBijection shift_bijection(int n, int k) {
  if (k < 0) throw range_error("negative shift");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) pairs.emplace_back(j, j + k);
  return PartialBijection(n, n + k, std::move(pairs));
}

namespace detail {

inline void partial_maps_from(int source, int target, int rank,
                              std::vector<std::pair<int, int>>& acc,
                              std::vector<char>& used, int next_x,
                              std::vector<PartialBijection>& out) {
  if (static_cast<int>(acc.size()) == rank) {
    out.emplace_back(source, target, acc);
    return;
  }
  const int remaining = rank - static_cast<int>(acc.size());
  for (int x = next_x; x + remaining - 1 <= source; ++x) {
    for (int y = 1; y <= target; ++y) {
      if (used[static_cast<std::size_t>(y - 1)]) continue;
      used[static_cast<std::size_t>(y - 1)] = 1;
      acc.emplace_back(x, y);
      partial_maps_from(source, target, rank, acc, used, x + 1, out);
      acc.pop_back();
      used[static_cast<std::size_t>(y - 1)] = 0;
    }
  }
}

}  // namespace detail

// All partial bijections {1..source} -> {1..target}, ordered by rank and then
// lexicographically on the sorted pair lists.
inline std::vector<PartialBijection> all_partial_bijections(int source, int target) {
  if (source < 0 || target < 0) throw range_error("negative segment size");
  std::vector<PartialBijection> out;
  for (int rank = 0; rank <= std::min(source, target); ++rank) {
    std::vector<std::pair<int, int>> acc;
    std::vector<char> used(static_cast<std::size_t>(target), 0);
    detail::partial_maps_from(source, target, rank, acc, used, 1, out);
  }
  std::sort(out.begin(), out.end(), [](const PartialBijection& a, const PartialBijection& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.pairs() < b.pairs();
  });
  return out;
}

}  // namespace classalg
