#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "wvg/error.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// A set of players, stored as sorted distinct 1-based indices. Coalitions
/// are index sets only; they do not know which game they belong to, so range
/// validation happens at the point of use.
class Coalition {
 public:
  Coalition() = default;

  /// Accepts any iterable of indices; rejects non-positive or duplicate ones.
  explicit Coalition(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.front() < 1)
      fail(Errc::index_out_of_range, "player indices are 1-based");
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      fail(Errc::index_out_of_range, "duplicate player in coalition");
  }

  static Coalition empty() { return Coalition(); }

  static Coalition full(int player_count) {
    std::vector<int> all(static_cast<std::size_t>(player_count));
    for (int i = 0; i < player_count; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return Coalition(std::move(all));
  }

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }

  bool contains(int player) const {
    return std::binary_search(members_.begin(), members_.end(), player);
  }

  bool operator==(const Coalition& other) const = default;

 private:
  std::vector<int> members_;
};

/// Weighted voting game (w_1,...,w_n; q): nonnegative integer weights and a
/// quota with 0 < q <= w(N). A coalition wins iff its total weight meets the
/// quota. Immutable after construction.
class WeightedVotingGame {
 public:
  WeightedVotingGame(std::vector<BigInt> weights, BigInt quota)
      : weights_(std::move(weights)), quota_(std::move(quota)) {
    if (weights_.empty()) fail(Errc::empty_player_list, "no players");
    total_ = 0;
    for (const BigInt& w : weights_) {
      if (w < 0) fail(Errc::negative_weight, "weight " + w.str());
      total_ += w;
    }
    if (quota_ <= 0 || quota_ > total_)
      fail(Errc::quota_out_of_range,
           "quota " + quota_.str() + " not in [1, " + total_.str() + "]");
  }

  int player_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& quota() const { return quota_; }
  const BigInt& total_weight() const { return total_; }

  /// Weight of player i (1-based).
  const BigInt& weight(int player) const {
    check_player(player);
    return weights_[static_cast<std::size_t>(player - 1)];
  }

  BigInt coalition_weight(const Coalition& c) const {
    BigInt sum = 0;
    for (int p : c.members()) sum += weight(p);
    return sum;
  }

  /// The simple-game valuation v: true iff w(C) >= q.
  bool wins(const Coalition& c) const { return coalition_weight(c) >= quota_; }

  void check_player(int player) const {
    if (player < 1 || player > player_count())
      fail(Errc::index_out_of_range,
           "player " + std::to_string(player) + " not in 1.." +
               std::to_string(player_count()));
  }

  void check_coalition(const Coalition& c) const {
    if (!c.is_empty()) check_player(c.members().back());
  }

  bool operator==(const WeightedVotingGame& other) const {
    return weights_ == other.weights_ && quota_ == other.quota_;
  }

 private:
  std::vector<BigInt> weights_;
  BigInt quota_;
  BigInt total_;
};

}  // namespace wvg
