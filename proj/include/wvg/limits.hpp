#pragma once

#include <cstddef>

namespace wvg {

/// Resource caps. Exceeding a cap raises Errc::resource_limit (or
/// Errc::too_large for the fixed brute-force guards) instead of thrashing.
struct Limits {
  /// Upper bound on allocated DP table cells; tables are indexed up to the
  /// total weight W, so this also bounds W for dense counting.
  std::size_t max_table_cells = 10'000'000;

  /// Upper bound on weight partitions enumerated by a split search.
  std::size_t max_partitions = 1'000'000;

  static const Limits& defaults() {
    static const Limits instance{};
    return instance;
  }
};

/// Hard guard on player/value counts for 2^k brute-force enumerations.
inline constexpr std::size_t kBruteForceMaxElements = 25;

/// Hard guard on player count for n! permutation enumeration.
inline constexpr int kBruteForceMaxPermutationPlayers = 9;

}  // namespace wvg
