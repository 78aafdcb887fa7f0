#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/numeric.hpp"
#include "wvg/random.hpp"
#include "wvg/reductions.hpp"

namespace wvg {

/// Random game with 1..max_players players, weights 0..max_weight (zeros
/// allowed — at least one weight is positive so a quota exists), quota
/// uniform in [1, total].
inline WeightedVotingGame random_game(Rng& rng, int max_players, int max_weight) {
  int n = rng.range(1, max_players);
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(n));
  long total = 0;
  for (int i = 0; i < n; ++i) {
    int w = rng.range(0, max_weight);
    weights.emplace_back(w);
    total += w;
  }
  if (total == 0) {
    int i = rng.range(0, n - 1);
    int w = rng.range(1, max_weight);
    weights[static_cast<std::size_t>(i)] = w;
    total = w;
  }
  BigInt quota = static_cast<long>(rng.below(static_cast<std::uint64_t>(total)) + 1);
  return WeightedVotingGame(std::move(weights), std::move(quota));
}

/// Random subset-sum instance with 1..max_values positive values up to
/// max_value and a target in the normalized range [1, total-1].
inline SubsetSumInstance random_subset_sum(Rng& rng, int max_values, int max_value) {
  int n = rng.range(1, max_values);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(n));
  long total = 0;
  for (int i = 0; i < n; ++i) {
    int v = rng.range(1, max_value);
    values.emplace_back(v);
    total += v;
  }
  if (total < 2) {  // need room for a target strictly inside (0, total)
    values[0] += 2;
    total += 2;
  }
  BigInt target = static_cast<long>(rng.below(static_cast<std::uint64_t>(total - 1)) + 1);
  return SubsetSumInstance(std::move(values), std::move(target));
}

inline CompareInstance random_compare(Rng& rng, int max_values, int max_value) {
  SubsetSumInstance left = random_subset_sum(rng, max_values, max_value);
  SubsetSumInstance right = random_subset_sum(rng, max_values, max_value);
  return CompareInstance(std::move(left), std::move(right));
}

/// Random restricted-comparison instance: positive values with an even total
/// of at least 6.
inline RRInstance random_rr(Rng& rng, int max_values, int max_value, bool flipped) {
  int n = rng.range(1, max_values);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(n) + 1);
  long total = 0;
  for (int i = 0; i < n; ++i) {
    int v = rng.range(1, max_value);
    values.emplace_back(v);
    total += v;
  }
  if (total % 2 != 0) {
    values.emplace_back(1);
    total += 1;
  }
  while (total < 6) {
    values.emplace_back(2);
    total += 2;
  }
  return RRInstance(std::move(values), flipped);
}

/// Random exact-cover instance over a base of size 3*cover_size with
/// 1..max_sets random 3-element subsets.
inline X3CInstance random_x3c(Rng& rng, int cover_size, int max_sets) {
  int base = 3 * cover_size;
  int m = rng.range(1, max_sets);
  std::vector<std::array<int, 3>> family;
  family.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> set{};
    set[0] = rng.range(1, base);
    do {
      set[1] = rng.range(1, base);
    } while (set[1] == set[0]);
    do {
      set[2] = rng.range(1, base);
    } while (set[2] == set[0] || set[2] == set[1]);
    family.push_back(set);
  }
  return X3CInstance(base, std::move(family));
}

}  // namespace wvg
