#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/limits.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

namespace detail {

inline std::size_t to_table_size(const BigInt& total, const Limits& limits,
                                 std::size_t per_entry) {
  auto maybe = to_size(total);
  if (!maybe) {
    fail(Errc::resource_limit, "total weight does not fit a table index");
  }
  std::size_t width = *maybe + 1;
  if (per_entry == 0) per_entry = 1;
  if (width > limits.max_table_cells / per_entry) {
    fail(Errc::resource_limit,
         "counting table would need " + std::to_string(width) + " x " +
             std::to_string(per_entry) + " cells (cap " +
             std::to_string(limits.max_table_cells) + ")");
  }
  return width;
}

inline std::vector<std::size_t> small_weights(const std::vector<BigInt>& values) {
  std::vector<std::size_t> out;
  out.reserve(values.size());
  for (const BigInt& v : values) {
    if (v < 0) fail(Errc::negative_weight, "negative value in counting table");
    auto maybe = to_size(v);
    if (!maybe) fail(Errc::resource_limit, "value does not fit a table index");
    out.push_back(*maybe);
  }
  return out;
}

/// Weights of the players of `game` outside `excluded`, in player order.
inline std::vector<BigInt> included_weights(const WeightedVotingGame& game,
                                            const Coalition& excluded) {
  game.check_coalition(excluded);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(game.player_count()));
  auto it = excluded.members().begin();
  for (int p = 1; p <= game.player_count(); ++p) {
    if (it != excluded.members().end() && *it == p) {
      ++it;
      continue;
    }
    values.push_back(game.weight(p));
  }
  return values;
}

/// The players of `game` outside `excluded`, as a coalition.
inline Coalition complement_coalition(const WeightedVotingGame& game,
                                      const Coalition& excluded) {
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(game.player_count()));
  for (int p = 1; p <= game.player_count(); ++p) {
    if (!excluded.contains(p)) members.push_back(p);
  }
  return Coalition(std::move(members));
}

}  // namespace detail

/// Dense table of subset-sum counts: entry s holds the number of subsets of a
/// fixed value multiset whose values add up to exactly s.
class WeightCountTable {
 public:
  WeightCountTable(std::vector<BigInt> counts, BigInt max_weight,
                   std::optional<Coalition> player_set = std::nullopt)
      : counts_(std::move(counts)),
        max_weight_(std::move(max_weight)),
        player_set_(std::move(player_set)) {}

  /// Largest representable sum (total of the tabulated values).
  const BigInt& max_weight() const { return max_weight_; }

  /// The players the table ranges over, when built from a game.
  const std::optional<Coalition>& player_set() const { return player_set_; }

  /// Number of subsets summing to exactly s; zero outside [0, max_weight].
  const BigInt& count(const BigInt& s) const {
    static const BigInt zero = 0;
    if (s < 0 || s > max_weight_) return zero;
    return counts_[*to_size(s)];
  }

  /// Number of subsets with sum in [lo, hi] (clamped; empty window -> 0).
  BigInt count_in_range(const BigInt& lo, const BigInt& hi) const {
    BigInt total = 0;
    if (hi < 0 || lo > max_weight_ || lo > hi) return total;
    std::size_t from = lo < 0 ? 0 : *to_size(lo);
    std::size_t to = hi > max_weight_ ? *to_size(max_weight_) : *to_size(hi);
    for (std::size_t s = from; s <= to; ++s) total += counts_[s];
    return total;
  }

  /// Total number of tabulated subsets (2^k for k values).
  BigInt total_subsets() const {
    BigInt total = 0;
    for (const BigInt& c : counts_) total += c;
    return total;
  }

  const std::vector<BigInt>& raw_counts() const { return counts_; }

 private:
  std::vector<BigInt> counts_;
  BigInt max_weight_;
  std::optional<Coalition> player_set_;
};

/// Dense table of subset counts split by cardinality: entry (s, c) holds the
/// number of c-element subsets of a fixed value multiset summing to exactly s.
class WeightCardTable {
 public:
  WeightCardTable(std::vector<BigInt> counts, BigInt max_weight,
                  std::size_t max_card,
                  std::optional<Coalition> player_set = std::nullopt)
      : counts_(std::move(counts)),
        max_weight_(std::move(max_weight)),
        max_card_(max_card),
        stride_(max_card + 1),
        player_set_(std::move(player_set)) {}

  const BigInt& max_weight() const { return max_weight_; }
  std::size_t max_cardinality() const { return max_card_; }

  /// The players the table ranges over, when built from a game.
  const std::optional<Coalition>& player_set() const { return player_set_; }

  /// Number of c-element subsets summing to exactly s.
  const BigInt& count(const BigInt& s, std::size_t c) const {
    static const BigInt zero = 0;
    if (s < 0 || s > max_weight_ || c > max_card_) return zero;
    return counts_[*to_size(s) * stride_ + c];
  }

  /// Number of c-element subsets with sum in [lo, hi].
  BigInt count_in_range(const BigInt& lo, const BigInt& hi,
                        std::size_t c) const {
    BigInt total = 0;
    if (c > max_card_ || hi < 0 || lo > max_weight_ || lo > hi) return total;
    std::size_t from = lo < 0 ? 0 : *to_size(lo);
    std::size_t to = hi > max_weight_ ? *to_size(max_weight_) : *to_size(hi);
    for (std::size_t s = from; s <= to; ++s) total += counts_[s * stride_ + c];
    return total;
  }

  const std::vector<BigInt>& raw_counts() const { return counts_; }

  /// Collapse the cardinality dimension into a plain weight-count table.
  WeightCountTable marginal() const {
    std::size_t width = *to_size(max_weight_) + 1;
    std::vector<BigInt> sums(width, BigInt(0));
    for (std::size_t s = 0; s < width; ++s) {
      for (std::size_t c = 0; c <= max_card_; ++c) {
        sums[s] += counts_[s * stride_ + c];
      }
    }
    return WeightCountTable(std::move(sums), max_weight_, player_set_);
  }

 private:
  std::vector<BigInt> counts_;
  BigInt max_weight_;
  std::size_t max_card_;
  std::size_t stride_;
  std::optional<Coalition> player_set_;
};

/// Full subset-sum count table over an explicit value multiset.
inline WeightCountTable build_value_table(const std::vector<BigInt>& values,
                                          const Limits& limits = Limits::defaults()) {
  BigInt total = 0;
  for (const BigInt& v : values) {
    if (v < 0) fail(Errc::negative_weight, "negative value in counting table");
    total += v;
  }
  std::size_t width = detail::to_table_size(total, limits, 1);
  std::vector<std::size_t> small = detail::small_weights(values);

  // In-place 0/1 subset DP; descending index keeps each value used once.
  std::vector<BigInt> counts(width, BigInt(0));
  counts[0] = 1;
  for (std::size_t w : small) {
    if (w == 0) {
      // A zero value doubles every count uniformly.
      for (BigInt& c : counts) c <<= 1;
      continue;
    }
    for (std::size_t s = width; s-- > w;) counts[s] += counts[s - w];
  }
  return WeightCountTable(std::move(counts), total);
}

/// Cardinality-resolved subset-sum count table over an explicit value multiset.
inline WeightCardTable build_value_card_table(const std::vector<BigInt>& values,
                                              const Limits& limits = Limits::defaults()) {
  BigInt total = 0;
  for (const BigInt& v : values) {
    if (v < 0) fail(Errc::negative_weight, "negative value in counting table");
    total += v;
  }
  std::size_t max_card = values.size();
  std::size_t stride = max_card + 1;
  std::size_t width = detail::to_table_size(total, limits, stride);
  std::vector<std::size_t> small = detail::small_weights(values);

  std::vector<BigInt> counts(width * stride, BigInt(0));
  counts[0 * stride + 0] = 1;
  for (std::size_t w : small) {
    // Descending s and c keep the (s - w, c - 1) source untouched this pass;
    // for w == 0 the same holds because only c decreases.
    for (std::size_t s = width; s-- > w;) {
      for (std::size_t c = max_card; c >= 1; --c) {
        counts[s * stride + c] += counts[(s - w) * stride + (c - 1)];
      }
    }
  }
  return WeightCardTable(std::move(counts), total, max_card);
}

/// Subset-sum counts over the weights of all players outside `excluded`.
inline WeightCountTable build_weight_table(const WeightedVotingGame& game,
                                           const Coalition& excluded = Coalition::empty(),
                                           const Limits& limits = Limits::defaults()) {
  WeightCountTable table = build_value_table(detail::included_weights(game, excluded), limits);
  return WeightCountTable(table.raw_counts(), table.max_weight(),
                          detail::complement_coalition(game, excluded));
}

/// Cardinality-resolved counts over the weights outside `excluded`.
inline WeightCardTable build_weight_card_table(const WeightedVotingGame& game,
                                               const Coalition& excluded = Coalition::empty(),
                                               const Limits& limits = Limits::defaults()) {
  WeightCardTable table = build_value_card_table(detail::included_weights(game, excluded), limits);
  return WeightCardTable(table.raw_counts(), table.max_weight(),
                         table.max_cardinality(),
                         detail::complement_coalition(game, excluded));
}

/// Same contract as build_value_table, computed by 2^k enumeration. Intended
/// as an independent cross-check; refuses more than kBruteForceMaxElements.
inline WeightCountTable brute_force_value_table(const std::vector<BigInt>& values,
                                                const Limits& limits = Limits::defaults()) {
  if (values.size() > kBruteForceMaxElements) {
    fail(Errc::too_large, "brute-force enumeration capped at " +
                              std::to_string(kBruteForceMaxElements) + " values");
  }
  BigInt total = 0;
  for (const BigInt& v : values) {
    if (v < 0) fail(Errc::negative_weight, "negative value in counting table");
    total += v;
  }
  std::size_t width = detail::to_table_size(total, limits, 1);
  std::vector<std::size_t> small = detail::small_weights(values);

  std::vector<BigInt> counts(width, BigInt(0));
  std::uint64_t subsets = std::uint64_t(1) << small.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (mask >> i & 1) sum += small[i];
    }
    ++counts[sum];
  }
  return WeightCountTable(std::move(counts), total);
}

/// Brute-force companion of build_weight_table.
inline WeightCountTable brute_force_weight_counts(const WeightedVotingGame& game,
                                                  const Coalition& excluded = Coalition::empty(),
                                                  const Limits& limits = Limits::defaults()) {
  WeightCountTable table =
      brute_force_value_table(detail::included_weights(game, excluded), limits);
  return WeightCountTable(table.raw_counts(), table.max_weight(),
                          detail::complement_coalition(game, excluded));
}

/// Brute-force companion of build_value_card_table.
inline WeightCardTable brute_force_value_card_table(const std::vector<BigInt>& values,
                                                    const Limits& limits = Limits::defaults()) {
  if (values.size() > kBruteForceMaxElements) {
    fail(Errc::too_large, "brute-force enumeration capped at " +
                              std::to_string(kBruteForceMaxElements) + " values");
  }
  BigInt total = 0;
  for (const BigInt& v : values) {
    if (v < 0) fail(Errc::negative_weight, "negative value in counting table");
    total += v;
  }
  std::size_t max_card = values.size();
  std::size_t stride = max_card + 1;
  std::size_t width = detail::to_table_size(total, limits, stride);
  std::vector<std::size_t> small = detail::small_weights(values);

  std::vector<BigInt> counts(width * stride, BigInt(0));
  std::uint64_t subsets = std::uint64_t(1) << small.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::size_t sum = 0;
    std::size_t card = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (mask >> i & 1) {
        sum += small[i];
        ++card;
      }
    }
    ++counts[sum * stride + card];
  }
  return WeightCardTable(std::move(counts), total, max_card);
}

/// Number of subsets of `values` summing to exactly `target`, via a DP table
/// truncated at `target`. Values must be positive (so truncation is sound).
inline BigInt count_subsets_dp(const std::vector<BigInt>& values, const BigInt& target,
                               const Limits& limits = Limits::defaults()) {
  for (const BigInt& v : values) {
    if (v <= 0) fail(Errc::invalid_instance, "subset-sum values must be positive");
  }
  if (target < 0) return 0;
  if (target == 0) return 1;
  auto maybe = to_size(target);
  if (!maybe || *maybe + 1 > limits.max_table_cells) {
    fail(Errc::resource_limit, "subset-sum target exceeds the table cap");
  }
  std::size_t width = *maybe + 1;
  std::vector<BigInt> counts(width, BigInt(0));
  counts[0] = 1;
  for (const BigInt& v : values) {
    if (v > target) continue;  // can never contribute to a sum <= target
    std::size_t w = *to_size(v);
    for (std::size_t s = width; s-- > w;) counts[s] += counts[s - w];
  }
  return counts[width - 1];
}

/// Number of subsets of `values` summing to exactly `target`, by recursive
/// enumeration with suffix-sum pruning. Handles values far too large for any
/// dense table; refuses more than kBruteForceMaxElements values.
inline BigInt count_subsets_enum(const std::vector<BigInt>& values, const BigInt& target) {
  if (values.size() > kBruteForceMaxElements) {
    fail(Errc::too_large, "subset enumeration capped at " +
                              std::to_string(kBruteForceMaxElements) + " values");
  }
  for (const BigInt& v : values) {
    if (v <= 0) fail(Errc::invalid_instance, "subset-sum values must be positive");
  }
  if (target < 0) return 0;
  std::vector<BigInt> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  // suffix[i] = sum of sorted[i..]; lets us stop when the rest can't reach.
  std::vector<BigInt> suffix(sorted.size() + 1, BigInt(0));
  for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

  BigInt found = 0;
  auto walk = [&](auto&& self, std::size_t i, const BigInt& remaining) -> void {
    if (remaining == 0) {
      ++found;
      return;
    }
    if (i == sorted.size() || remaining < 0 || suffix[i] < remaining) return;
    self(self, i + 1, remaining - sorted[i]);
    self(self, i + 1, remaining);
  };
  walk(walk, 0, target);
  return found;
}

/// Per-cardinality version of count_subsets_enum: entry c of the result is
/// the number of c-element subsets of `values` summing to `target`.
inline std::vector<BigInt> count_subsets_enum_by_card(const std::vector<BigInt>& values,
                                                      const BigInt& target) {
  if (values.size() > kBruteForceMaxElements) {
    fail(Errc::too_large, "subset enumeration capped at " +
                              std::to_string(kBruteForceMaxElements) + " values");
  }
  for (const BigInt& v : values) {
    if (v <= 0) fail(Errc::invalid_instance, "subset-sum values must be positive");
  }
  std::vector<BigInt> counts(values.size() + 1, BigInt(0));
  if (target < 0) return counts;
  std::vector<BigInt> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<BigInt> suffix(sorted.size() + 1, BigInt(0));
  for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

  auto walk = [&](auto&& self, std::size_t i, const BigInt& remaining,
                  std::size_t card) -> void {
    if (remaining == 0) {
      ++counts[card];
      return;
    }
    if (i == sorted.size() || remaining < 0 || suffix[i] < remaining) return;
    self(self, i + 1, remaining - sorted[i], card + 1);
    self(self, i + 1, remaining, card);
  };
  walk(walk, 0, target, 0);
  return counts;
}

}  // namespace wvg
