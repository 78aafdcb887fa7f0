#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wvg/counting.hpp"
#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/indices.hpp"
#include "wvg/limits.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// A set of players who pool their weight into one new player.
struct MergeSpec {
  Coalition coalition;
};

/// One player splitting into parts.size() new identities with the given
/// nonnegative weights; the parts must add up to the player's weight.
struct SplitSpec {
  int player = 0;
  std::vector<BigInt> parts;
};

/// Outcome of a manipulation check: power before, power after, their exact
/// difference, and (for split searches) the witnessing part assignment.
struct ManipulationVerdict {
  bool beneficial = false;
  Rational margin;  // after - before; beneficial iff margin > 0
  Rational before;
  Rational after;
  std::optional<SplitSpec> witness;
};

enum class SearchMode {
  first_hit,    // stop at the first strictly beneficial assignment
  best_margin,  // scan everything, keep the largest margin (first on ties)
};

namespace detail {

inline void check_merge_spec(const WeightedVotingGame& game, const MergeSpec& spec) {
  if (spec.coalition.is_empty()) {
    fail(Errc::empty_coalition, "merge coalition must be nonempty");
  }
  game.check_coalition(spec.coalition);
}

inline void check_split_spec(const WeightedVotingGame& game, const SplitSpec& spec) {
  game.check_player(spec.player);
  if (spec.parts.size() < 2) {
    fail(Errc::bad_part_count, "split needs at least 2 parts, got " +
                                   std::to_string(spec.parts.size()));
  }
  BigInt total = 0;
  for (const BigInt& p : spec.parts) {
    if (p < 0) fail(Errc::negative_weight, "split parts must be nonnegative");
    total += p;
  }
  if (total != game.weight(spec.player)) {
    fail(Errc::weight_mismatch, "split parts sum to " + to_string(total) +
                                    ", expected " +
                                    to_string(game.weight(spec.player)));
  }
}

}  // namespace detail

/// The game after the coalition pools its weight: the merged player comes
/// first, the remaining players keep their relative order, quota unchanged.
inline WeightedVotingGame merge(const WeightedVotingGame& game, const MergeSpec& spec) {
  detail::check_merge_spec(game, spec);
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(game.player_count()) -
                  spec.coalition.size() + 1);
  weights.push_back(game.coalition_weight(spec.coalition));
  for (int p = 1; p <= game.player_count(); ++p) {
    if (!spec.coalition.contains(p)) weights.push_back(game.weight(p));
  }
  return WeightedVotingGame(std::move(weights), game.quota());
}

/// The game after one player splits: its weight parts are inserted in place,
/// all other players keep their order, quota unchanged. The new identities
/// are players spec.player .. spec.player + parts - 1.
inline WeightedVotingGame split(const WeightedVotingGame& game, const SplitSpec& spec) {
  detail::check_split_spec(game, spec);
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(game.player_count()) +
                  spec.parts.size() - 1);
  for (int p = 1; p <= game.player_count(); ++p) {
    if (p == spec.player) {
      weights.insert(weights.end(), spec.parts.begin(), spec.parts.end());
    } else {
      weights.push_back(game.weight(p));
    }
  }
  return WeightedVotingGame(std::move(weights), game.quota());
}

namespace detail {

/// Margin components for a set of positions in an original and a transformed
/// game: sum of the chosen players' index values in each. Denominators are
/// cleared exactly — over the larger power of two for the Banzhaf families,
/// over a factorial ratio for Shapley-Shubik — before the single final
/// division, so no intermediate rounding can occur.
struct PowerPair {
  Rational before;
  Rational after;
  Rational margin;  // after - before, computed via cleared denominators
};

inline PowerPair compare_power(const WeightedVotingGame& old_game,
                               const std::vector<int>& old_players,
                               const WeightedVotingGame& new_game,
                               const std::vector<int>& new_players,
                               IndexFamily family, const Limits& limits) {
  auto sum_raw = [](const std::vector<BigInt>& raw, const std::vector<int>& players) {
    BigInt sum = 0;
    for (int p : players) sum += raw[static_cast<std::size_t>(p - 1)];
    return sum;
  };

  std::size_t n_old = static_cast<std::size_t>(old_game.player_count());
  std::size_t n_new = static_cast<std::size_t>(new_game.player_count());
  PowerPair out;

  switch (family) {
    case IndexFamily::raw_banzhaf: {
      BigInt before = sum_raw(raw_banzhaf_all(old_game, limits), old_players);
      BigInt after = sum_raw(raw_banzhaf_all(new_game, limits), new_players);
      out.before = Rational(before);
      out.after = Rational(after);
      out.margin = Rational(after - before);
      return out;
    }
    case IndexFamily::probabilistic_banzhaf: {
      BigInt before = sum_raw(raw_banzhaf_all(old_game, limits), old_players);
      BigInt after = sum_raw(raw_banzhaf_all(new_game, limits), new_players);
      // Align the 2^(n-1) denominators by shifting the smaller-game count.
      std::size_t e = (n_old > n_new ? n_old : n_new) - 1;
      BigInt before_aligned = before << (e - (n_old - 1));
      BigInt after_aligned = after << (e - (n_new - 1));
      out.before = Rational(before, pow2(n_old - 1));
      out.after = Rational(after, pow2(n_new - 1));
      out.margin = Rational(after_aligned - before_aligned, pow2(e));
      return out;
    }
    case IndexFamily::normalized_banzhaf: {
      std::vector<BigInt> old_raw = raw_banzhaf_all(old_game, limits);
      std::vector<BigInt> new_raw = raw_banzhaf_all(new_game, limits);
      BigInt old_total = 0;
      for (const BigInt& r : old_raw) old_total += r;
      BigInt new_total = 0;
      for (const BigInt& r : new_raw) new_total += r;
      out.before = Rational(sum_raw(old_raw, old_players), old_total);
      out.after = Rational(sum_raw(new_raw, new_players), new_total);
      out.margin = out.after - out.before;
      return out;
    }
    case IndexFamily::shapley_shubik: {
      BigInt before = sum_raw(raw_shapley_shubik_all(old_game, limits), old_players);
      BigInt after = sum_raw(raw_shapley_shubik_all(new_game, limits), new_players);
      // Clear n_old! vs n_new! over the larger factorial.
      std::size_t e = n_old > n_new ? n_old : n_new;
      BigInt before_aligned = before * (factorial(e) / factorial(n_old));
      BigInt after_aligned = after * (factorial(e) / factorial(n_new));
      out.before = Rational(before, factorial(n_old));
      out.after = Rational(after, factorial(n_new));
      out.margin = Rational(after_aligned - before_aligned, factorial(e));
      return out;
    }
  }
  fail(Errc::invalid_instance, "unknown index family");
}

}  // namespace detail

/// Does pooling the coalition's weight strictly increase its power, i.e. is
/// the merged player's index larger than the coalition members' index sum?
inline ManipulationVerdict is_beneficial_merge(const WeightedVotingGame& game,
                                               const MergeSpec& spec, IndexFamily family,
                                               const Limits& limits = Limits::defaults()) {
  detail::check_merge_spec(game, spec);
  WeightedVotingGame merged = merge(game, spec);
  detail::PowerPair p = detail::compare_power(game, spec.coalition.members(),
                                              merged, {1}, family, limits);
  ManipulationVerdict verdict;
  verdict.before = p.before;
  verdict.after = p.after;
  verdict.margin = p.margin;
  verdict.beneficial = p.margin > 0;
  return verdict;
}

/// Does this specific part assignment strictly increase power, i.e. do the
/// new identities' index values add up to more than the player had?
inline ManipulationVerdict evaluate_split(const WeightedVotingGame& game,
                                          const SplitSpec& spec, IndexFamily family,
                                          const Limits& limits = Limits::defaults()) {
  detail::check_split_spec(game, spec);
  WeightedVotingGame after_game = split(game, spec);
  std::vector<int> identities(spec.parts.size());
  for (std::size_t j = 0; j < identities.size(); ++j) {
    identities[j] = spec.player + static_cast<int>(j);
  }
  detail::PowerPair p = detail::compare_power(game, {spec.player}, after_game,
                                              identities, family, limits);
  ManipulationVerdict verdict;
  verdict.before = p.before;
  verdict.after = p.after;
  verdict.margin = p.margin;
  verdict.beneficial = p.margin > 0;
  verdict.witness = spec;
  return verdict;
}

namespace detail {

/// Visit every multiset of positive integers summing to `remaining` with at
/// most `slots` elements, parts non-increasing, in lexicographically
/// decreasing order. The callback returns false to stop early; so does this.
template <typename F>
bool for_each_partition_rec(const BigInt& remaining, const BigInt& largest,
                            std::size_t slots, std::vector<BigInt>& acc, F& visit) {
  if (remaining == 0) return visit(acc);
  if (slots == 0) return true;
  BigInt hi = largest < remaining ? largest : remaining;
  // The next part must be big enough that `slots` copies reach `remaining`.
  BigInt lo = (remaining + BigInt(slots) - 1) / BigInt(slots);
  for (BigInt part = hi; part >= lo; --part) {
    acc.push_back(part);
    bool keep_going = for_each_partition_rec(remaining - part, part, slots - 1, acc, visit);
    acc.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

template <typename F>
void for_each_partition(const BigInt& total, std::size_t max_parts, F&& visit) {
  std::vector<BigInt> acc;
  F& ref = visit;
  for_each_partition_rec(total, total, max_parts, acc, ref);
}

}  // namespace detail

/// Number of multisets of positive integers with at most `max_parts` elements
/// summing to `total` — exact, without enumerating them.
inline BigInt count_partitions(const BigInt& total, std::size_t max_parts,
                               const Limits& limits = Limits::defaults()) {
  if (total < 0) return 0;
  if (total == 0) return 1;
  if (max_parts == 0) return 0;
  if (max_parts == 1) return 1;
  if (max_parts == 2) return total / 2 + 1;
  auto maybe = to_size(total);
  if (!maybe || *maybe + 1 > limits.max_table_cells) {
    fail(Errc::resource_limit, "partition space too large to even count");
  }
  // Partitions into at most k parts = partitions with largest part <= k
  // (conjugation), which a bounded-coin DP counts directly.
  std::size_t w = *maybe;
  std::size_t k = max_parts < w ? max_parts : w;
  std::vector<BigInt> dp(w + 1, BigInt(0));
  dp[0] = 1;
  for (std::size_t part = 1; part <= k; ++part) {
    for (std::size_t s = part; s <= w; ++s) dp[s] += dp[s - part];
  }
  return dp[w];
}

/// All multisets of positive integers with at most `max_parts` elements
/// summing to `total`, each part sequence non-increasing, in lexicographically
/// decreasing order. E.g. total=3, max_parts=3 -> (3), (2,1), (1,1,1).
inline std::vector<std::vector<BigInt>> enumerate_partitions(
    const BigInt& total, std::size_t max_parts,
    const Limits& limits = Limits::defaults()) {
  if (total < 0) fail(Errc::invalid_instance, "cannot partition a negative total");
  BigInt count = count_partitions(total, max_parts, limits);
  if (count > BigInt(limits.max_partitions)) {
    fail(Errc::resource_limit, "enumeration would produce " + to_string(count) +
                                   " partitions (cap " +
                                   std::to_string(limits.max_partitions) + ")");
  }
  std::vector<std::vector<BigInt>> out;
  detail::for_each_partition(total, max_parts, [&](const std::vector<BigInt>& parts) {
    out.push_back(parts);
    return true;
  });
  return out;
}

/// Search all ways of splitting player i into m identities for a strictly
/// beneficial one. Only partitions of w_i into at most min(m, w_i) positive
/// parts are tried, padded with zero-weight identities to exactly m parts;
/// zero parts can't change any index value, so nothing else needs checking.
/// Returns the first beneficial assignment in enumeration order (or, in
/// best_margin mode, the best one); otherwise the best margin seen.
inline ManipulationVerdict search_beneficial_split(const WeightedVotingGame& game,
                                                   int player, int m, IndexFamily family,
                                                   SearchMode mode = SearchMode::first_hit,
                                                   const Limits& limits = Limits::defaults()) {
  game.check_player(player);
  if (m < 2) {
    fail(Errc::bad_part_count, "split needs at least 2 identities, got " +
                                   std::to_string(m));
  }
  const BigInt& w = game.weight(player);
  std::size_t max_positive = w < m ? *to_size(w) : static_cast<std::size_t>(m);

  BigInt count = count_partitions(w, max_positive, limits);
  if (count > BigInt(limits.max_partitions)) {
    fail(Errc::resource_limit, "split search would evaluate " + to_string(count) +
                                   " partitions (cap " +
                                   std::to_string(limits.max_partitions) + ")");
  }

  std::optional<ManipulationVerdict> best;
  detail::for_each_partition(w, max_positive, [&](const std::vector<BigInt>& parts) {
    SplitSpec spec;
    spec.player = player;
    spec.parts = parts;
    spec.parts.resize(static_cast<std::size_t>(m), BigInt(0));
    ManipulationVerdict verdict = evaluate_split(game, spec, family, limits);
    if (!best || verdict.margin > best->margin) best = verdict;
    return !(mode == SearchMode::first_hit && verdict.beneficial);
  });
  return *best;  // at least one partition always exists
}

}  // namespace wvg
