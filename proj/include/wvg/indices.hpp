#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wvg/counting.hpp"
#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/limits.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

enum class IndexFamily {
  raw_banzhaf,
  probabilistic_banzhaf,
  normalized_banzhaf,
  shapley_shubik,
};

inline const char* family_name(IndexFamily family) {
  switch (family) {
    case IndexFamily::raw_banzhaf: return "raw-banzhaf";
    case IndexFamily::probabilistic_banzhaf: return "probabilistic-banzhaf";
    case IndexFamily::normalized_banzhaf: return "normalized-banzhaf";
    case IndexFamily::shapley_shubik: return "shapley-shubik";
  }
  fail(Errc::invalid_instance, "unknown index family");
}

inline IndexFamily parse_family(std::string_view name) {
  if (name == "raw-banzhaf") return IndexFamily::raw_banzhaf;
  if (name == "probabilistic-banzhaf" || name == "banzhaf") {
    return IndexFamily::probabilistic_banzhaf;
  }
  if (name == "normalized-banzhaf") return IndexFamily::normalized_banzhaf;
  if (name == "shapley-shubik" || name == "shapley") return IndexFamily::shapley_shubik;
  fail(Errc::parse_error, "unknown index family '" + std::string(name) + "'");
}

/// Per-player index values for one family: exact rationals plus the big
/// integers they reduce from (pivot counts, or the Shapley-Shubik numerator
/// over n!).
struct PowerReport {
  IndexFamily family;
  std::vector<BigInt> raw;
  std::vector<Rational> values;
};

namespace detail {

/// Undo one forward 0/1-knapsack pass, leaving the table over the remaining
/// values. Exact inverse of the update in build_value_table.
inline void remove_value(std::vector<BigInt>& counts, std::size_t w) {
  if (w == 0) {
    for (BigInt& c : counts) c >>= 1;
    return;
  }
  for (std::size_t s = w; s < counts.size(); ++s) counts[s] -= counts[s - w];
}

/// Undo one forward pass of build_value_card_table (stride = max_card + 1).
inline void remove_value_card(std::vector<BigInt>& counts, std::size_t stride,
                              std::size_t w) {
  std::size_t width = counts.size() / stride;
  for (std::size_t s = w; s < width; ++s) {
    for (std::size_t c = 1; c < stride; ++c) {
      counts[s * stride + c] -= counts[(s - w) * stride + (c - 1)];
    }
  }
}

inline std::vector<std::size_t> game_small_weights(const WeightedVotingGame& game) {
  return small_weights(game.weights());
}

}  // namespace detail

/// Raw Banzhaf counts for all players: raw[i-1] is the number of coalitions
/// C not containing i with q - w_i <= w(C) <= q - 1.
inline std::vector<BigInt> raw_banzhaf_all(const WeightedVotingGame& game,
                                           const Limits& limits = Limits::defaults()) {
  int n = game.player_count();
  WeightCountTable full = build_weight_table(game, Coalition::empty(), limits);
  std::vector<std::size_t> small = detail::game_small_weights(game);

  std::vector<BigInt> raw;
  raw.reserve(static_cast<std::size_t>(n));
  std::vector<BigInt> scratch;
  for (int i = 1; i <= n; ++i) {
    scratch = full.raw_counts();
    detail::remove_value(scratch, small[static_cast<std::size_t>(i - 1)]);
    WeightCountTable others(std::move(scratch),
                            game.total_weight() - game.weight(i));
    raw.push_back(others.count_in_range(game.quota() - game.weight(i),
                                        game.quota() - 1));
  }
  return raw;
}

/// Raw Shapley-Shubik numerators for all players: raw[i-1] is
/// sum over c of c! (n-1-c)! times the number of c-element coalitions C not
/// containing i with q - w_i <= w(C) <= q - 1. The index is raw[i-1] / n!.
inline std::vector<BigInt> raw_shapley_shubik_all(const WeightedVotingGame& game,
                                                  const Limits& limits = Limits::defaults()) {
  int n = game.player_count();
  std::size_t un = static_cast<std::size_t>(n);
  WeightCardTable full = build_weight_card_table(game, Coalition::empty(), limits);
  std::vector<std::size_t> small = detail::game_small_weights(game);

  // weight[c] = c! (n-1-c)! for coalition sizes 0..n-1.
  std::vector<BigInt> order_weight(un, BigInt(0));
  for (std::size_t c = 0; c + 1 <= un; ++c) {
    order_weight[c] = factorial(c) * factorial(un - 1 - c);
  }

  std::size_t stride = un + 1;
  std::vector<BigInt> raw;
  raw.reserve(un);
  std::vector<BigInt> scratch;
  for (int i = 1; i <= n; ++i) {
    scratch = full.raw_counts();
    detail::remove_value_card(scratch, stride, small[static_cast<std::size_t>(i - 1)]);
    WeightCardTable others(std::move(scratch), game.total_weight() - game.weight(i), un);
    BigInt sum = 0;
    for (std::size_t c = 0; c + 1 <= un; ++c) {
      sum += order_weight[c] * others.count_in_range(game.quota() - game.weight(i),
                                                     game.quota() - 1, c);
    }
    raw.push_back(std::move(sum));
  }
  return raw;
}

inline BigInt raw_banzhaf(const WeightedVotingGame& game, int player,
                          const Limits& limits = Limits::defaults()) {
  game.check_player(player);
  WeightCountTable others = build_weight_table(game, Coalition({player}), limits);
  return others.count_in_range(game.quota() - game.weight(player), game.quota() - 1);
}

inline Rational probabilistic_banzhaf(const WeightedVotingGame& game, int player,
                                      const Limits& limits = Limits::defaults()) {
  BigInt raw = raw_banzhaf(game, player, limits);
  return Rational(raw, pow2(static_cast<std::size_t>(game.player_count() - 1)));
}

inline Rational normalized_banzhaf(const WeightedVotingGame& game, int player,
                                   const Limits& limits = Limits::defaults()) {
  game.check_player(player);
  std::vector<BigInt> raw = raw_banzhaf_all(game, limits);
  BigInt total = std::accumulate(raw.begin(), raw.end(), BigInt(0));
  return Rational(raw[static_cast<std::size_t>(player - 1)], total);
}

inline BigInt raw_shapley_shubik(const WeightedVotingGame& game, int player,
                                 const Limits& limits = Limits::defaults()) {
  game.check_player(player);
  int n = game.player_count();
  std::size_t un = static_cast<std::size_t>(n);
  WeightCardTable others = build_weight_card_table(game, Coalition({player}), limits);
  BigInt sum = 0;
  for (std::size_t c = 0; c + 1 <= un; ++c) {
    sum += factorial(c) * factorial(un - 1 - c) *
           others.count_in_range(game.quota() - game.weight(player),
                                 game.quota() - 1, c);
  }
  return sum;
}

inline Rational shapley_shubik(const WeightedVotingGame& game, int player,
                               const Limits& limits = Limits::defaults()) {
  BigInt raw = raw_shapley_shubik(game, player, limits);
  return Rational(raw, factorial(static_cast<std::size_t>(game.player_count())));
}

/// All players' values for one family, computed from shared tables.
inline PowerReport full_report(const WeightedVotingGame& game, IndexFamily family,
                               const Limits& limits = Limits::defaults()) {
  PowerReport report;
  report.family = family;
  std::size_t un = static_cast<std::size_t>(game.player_count());

  if (family == IndexFamily::shapley_shubik) {
    report.raw = raw_shapley_shubik_all(game, limits);
    BigInt denom = factorial(un);
    report.values.reserve(un);
    for (const BigInt& r : report.raw) report.values.emplace_back(r, denom);
    return report;
  }

  report.raw = raw_banzhaf_all(game, limits);
  report.values.reserve(un);
  switch (family) {
    case IndexFamily::raw_banzhaf:
      for (const BigInt& r : report.raw) report.values.emplace_back(r);
      break;
    case IndexFamily::probabilistic_banzhaf: {
      BigInt denom = pow2(un - 1);
      for (const BigInt& r : report.raw) report.values.emplace_back(r, denom);
      break;
    }
    case IndexFamily::normalized_banzhaf: {
      BigInt denom = std::accumulate(report.raw.begin(), report.raw.end(), BigInt(0));
      for (const BigInt& r : report.raw) report.values.emplace_back(r, denom);
      break;
    }
    case IndexFamily::shapley_shubik:
      break;  // handled above
  }
  return report;
}

/// Shapley-Shubik value by explicit enumeration of all n! player orders.
/// Independent of the counting tables; refuses games with more than
/// kBruteForceMaxPermutationPlayers players.
inline Rational brute_force_shapley(const WeightedVotingGame& game, int player) {
  game.check_player(player);
  int n = game.player_count();
  if (n > kBruteForceMaxPermutationPlayers) {
    fail(Errc::too_large,
         "permutation enumeration capped at " +
             std::to_string(kBruteForceMaxPermutationPlayers) + " players");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  BigInt pivotal = 0;
  do {
    BigInt before = 0;
    for (int p : order) {
      if (p == player) break;
      before += game.weight(p);
    }
    if (before < game.quota() && before + game.weight(player) >= game.quota()) {
      ++pivotal;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(pivotal, factorial(static_cast<std::size_t>(n)));
}

}  // namespace wvg
