#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "wvg/generate.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/random.hpp"

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace wvg;

namespace {

MergeSpec merge_of(std::vector<int> players) {
  return MergeSpec{Coalition(std::move(players))};
}

SplitSpec split_of(int player, std::vector<BigInt> parts) {
  SplitSpec spec;
  spec.player = player;
  spec.parts = std::move(parts);
  return spec;
}

}  // namespace

TEST_CASE("merge builds the pooled game") {
  WeightedVotingGame g({1, 1, 1}, 2);
  CHECK(merge(g, merge_of({2, 3})) == WeightedVotingGame({2, 1}, 2));

  WeightedVotingGame gadget({4, 4, 8, 1, 1, 1, 1}, 8);
  CHECK(merge(gadget, merge_of({5, 6, 7})) ==
        WeightedVotingGame({3, 4, 4, 8, 1}, 8));

  // Singleton merge only reorders.
  CHECK(merge(g, merge_of({2})) == g);

  CHECK_FAILS_WITH(merge(g, MergeSpec{Coalition::empty()}), Errc::empty_coalition);
  CHECK_FAILS_WITH(merge(g, merge_of({4})), Errc::index_out_of_range);
}

TEST_CASE("split builds the in-place expansion") {
  WeightedVotingGame g({2, 1, 1}, 3);
  CHECK(split(g, split_of(1, {1, 1})) == WeightedVotingGame({1, 1, 1, 1}, 3));
  CHECK(split(g, split_of(1, {2, 0})) == WeightedVotingGame({2, 0, 1, 1}, 3));

  WeightedVotingGame gadget({4, 4, 8, 1, 3}, 8);
  CHECK(split(gadget, split_of(5, {1, 1, 1})) ==
        WeightedVotingGame({4, 4, 8, 1, 1, 1, 1}, 8));

  CHECK_FAILS_WITH(split(g, split_of(4, {1, 1})), Errc::index_out_of_range);
  CHECK_FAILS_WITH(split(g, split_of(1, {2})), Errc::bad_part_count);
  CHECK_FAILS_WITH(split(g, split_of(1, {3, -1})), Errc::negative_weight);
  CHECK_FAILS_WITH(split(WeightedVotingGame({4}, 4), split_of(1, {2, 3})),
                   Errc::weight_mismatch);
}

TEST_CASE("merge verdicts on pinned games") {
  ManipulationVerdict flat =
      is_beneficial_merge(WeightedVotingGame({1, 1, 1}, 2), merge_of({2, 3}),
                          IndexFamily::probabilistic_banzhaf);
  CHECK_FALSE(flat.beneficial);
  CHECK(flat.margin == 0);
  CHECK(flat.before == 1);
  CHECK(flat.after == 1);
  CHECK_FALSE(flat.witness.has_value());

  ManipulationVerdict gain =
      is_beneficial_merge(WeightedVotingGame({4, 4, 8, 1, 1, 1, 1}, 8),
                          merge_of({5, 6, 7}), IndexFamily::probabilistic_banzhaf);
  CHECK(gain.beneficial);
  CHECK(gain.margin == Rational(1, 32));
  CHECK(gain.after - gain.before == gain.margin);

  // The same merge can point the other way for a different family.
  ManipulationVerdict ss = is_beneficial_merge(WeightedVotingGame({2, 1, 1}, 3),
                                               merge_of({2, 3}),
                                               IndexFamily::shapley_shubik);
  CHECK(ss.beneficial);
  CHECK(ss.margin == Rational(1, 6));
}

TEST_CASE("two-player merges never move probabilistic Banzhaf power") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedVotingGame g = random_game(rng, 8, 12);
    if (g.player_count() < 2) continue;
    int i = rng.range(1, g.player_count());
    int j = rng.range(1, g.player_count());
    if (i == j) j = (j % g.player_count()) + 1;
    ManipulationVerdict v = is_beneficial_merge(g, merge_of({i, j}),
                                                IndexFamily::probabilistic_banzhaf);
    CHECK(v.margin == 0);
    CHECK_FALSE(v.beneficial);
  }
}

TEST_CASE("singleton merges have margin zero in every family") {
  Rng rng(102);
  for (IndexFamily family :
       {IndexFamily::raw_banzhaf, IndexFamily::probabilistic_banzhaf,
        IndexFamily::normalized_banzhaf, IndexFamily::shapley_shubik}) {
    WeightedVotingGame g = random_game(rng, 7, 10);
    for (int i = 1; i <= g.player_count(); ++i) {
      CHECK(is_beneficial_merge(g, merge_of({i}), family).margin == 0);
    }
  }
}

TEST_CASE("split verdicts on pinned games") {
  WeightedVotingGame gadget({2, 4, 4, 6, 1, 3}, 8);
  ManipulationVerdict v = evaluate_split(gadget, split_of(6, {1, 1, 1}),
                                         IndexFamily::probabilistic_banzhaf);
  CHECK(v.beneficial);
  CHECK(v.margin == Rational(1, 128));
  CHECK(v.before == Rational(1, 4));
  CHECK(v.after == Rational(33, 128));
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->player == 6);
  CHECK(v.witness->parts == std::vector<BigInt>{1, 1, 1});

  // A (w, 0) split adds only a dummy, so nothing moves.
  ManipulationVerdict dummy = evaluate_split(gadget, split_of(4, {6, 0}),
                                             IndexFamily::probabilistic_banzhaf);
  CHECK(dummy.margin == 0);
}

TEST_CASE("two-part splits never move probabilistic Banzhaf power") {
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedVotingGame g = random_game(rng, 8, 12);
    int i = rng.range(1, g.player_count());
    BigInt w = g.weight(i);
    BigInt first = w == 0 ? BigInt(0) : BigInt(rng.below(*to_size(w) + 1));
    ManipulationVerdict v = evaluate_split(g, split_of(i, {first, w - first}),
                                           IndexFamily::probabilistic_banzhaf);
    CHECK(v.margin == 0);
    CHECK_FALSE(v.beneficial);
  }
}

TEST_CASE("splitting and re-merging are exact mirrors") {
  Rng rng(104);
  for (IndexFamily family :
       {IndexFamily::raw_banzhaf, IndexFamily::probabilistic_banzhaf,
        IndexFamily::normalized_banzhaf, IndexFamily::shapley_shubik}) {
    for (int trial = 0; trial < 15; ++trial) {
      WeightedVotingGame g = random_game(rng, 6, 8);
      int i = rng.range(1, g.player_count());
      BigInt w = g.weight(i);
      BigInt first = w == 0 ? BigInt(0) : BigInt(rng.below(*to_size(w) + 1));
      SplitSpec spec = split_of(i, {first, w - first});

      ManipulationVerdict forward = evaluate_split(g, spec, family);
      ManipulationVerdict backward =
          is_beneficial_merge(split(g, spec), merge_of({i, i + 1}), family);
      CHECK(forward.margin == -backward.margin);
    }
  }
}

TEST_CASE("partition counts and enumeration order") {
  CHECK(enumerate_partitions(3, 3) ==
        std::vector<std::vector<BigInt>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<std::vector<BigInt>>{{4}, {3, 1}, {2, 2}});
  CHECK(enumerate_partitions(0, 5) == std::vector<std::vector<BigInt>>{{}});

  CHECK(count_partitions(0, 3) == 1);
  CHECK(count_partitions(5, 1) == 1);
  CHECK(count_partitions(5, 2) == 3);
  CHECK(count_partitions(7, 7) == 15);

  for (int total = 0; total <= 12; ++total) {
    for (std::size_t parts = 1; parts <= 6; ++parts) {
      std::vector<std::vector<BigInt>> all = enumerate_partitions(total, parts);
      CHECK(BigInt(all.size()) == count_partitions(total, parts));
      CHECK(BigInt(oracle::partitions_by_enumeration(total, parts)) ==
            count_partitions(total, parts));
      // Each entry is non-increasing, positive, sums to the total, and the
      // sequence is strictly lexicographically decreasing.
      for (std::size_t k = 0; k < all.size(); ++k) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < all[k].size(); ++j) {
          CHECK(all[k][j] > 0);
          if (j > 0) CHECK(all[k][j - 1] >= all[k][j]);
          sum += all[k][j];
        }
        CHECK(sum == total);
        if (k > 0) CHECK(all[k - 1] > all[k]);
      }
    }
  }
}

TEST_CASE("split search on the pinned gadget") {
  WeightedVotingGame gadget({2, 4, 4, 6, 1, 3}, 8);

  ManipulationVerdict first = search_beneficial_split(
      gadget, 6, 3, IndexFamily::probabilistic_banzhaf);
  CHECK(first.beneficial);
  CHECK(first.margin == Rational(1, 128));
  REQUIRE(first.witness.has_value());
  CHECK(first.witness->parts == std::vector<BigInt>{1, 1, 1});

  ManipulationVerdict best = search_beneficial_split(
      gadget, 6, 3, IndexFamily::probabilistic_banzhaf, SearchMode::best_margin);
  CHECK(best.beneficial);
  CHECK(best.margin == first.margin);
  REQUIRE(best.witness.has_value());
  CHECK(best.witness->parts == first.witness->parts);

  // Extra identities beyond w_i only add zero-weight padding.
  ManipulationVerdict wider = search_beneficial_split(
      gadget, 6, 5, IndexFamily::probabilistic_banzhaf);
  CHECK(wider.beneficial == first.beneficial);
  CHECK(wider.margin == first.margin);
  REQUIRE(wider.witness.has_value());
  CHECK(wider.witness->parts == std::vector<BigInt>{1, 1, 1, 0, 0});
}

TEST_CASE("split search reports the best margin when nothing is beneficial") {
  ManipulationVerdict v = search_beneficial_split(
      WeightedVotingGame({1, 1, 1}, 2), 1, 2, IndexFamily::probabilistic_banzhaf);
  CHECK_FALSE(v.beneficial);
  CHECK(v.margin == 0);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->parts == std::vector<BigInt>{1, 0});

  // The flipped counterpart of the merge gadget is pinned not beneficial.
  ManipulationVerdict flipped = search_beneficial_split(
      WeightedVotingGame({4, 4, 8, 1, 3}, 8), 5, 3,
      IndexFamily::probabilistic_banzhaf);
  CHECK_FALSE(flipped.beneficial);
}

TEST_CASE("split search honours zero weights and bad part counts") {
  WeightedVotingGame g({0, 3, 2}, 4);
  ManipulationVerdict v =
      search_beneficial_split(g, 1, 4, IndexFamily::shapley_shubik);
  CHECK_FALSE(v.beneficial);
  CHECK(v.margin == 0);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->parts == std::vector<BigInt>(4, BigInt(0)));

  CHECK_FAILS_WITH(search_beneficial_split(g, 2, 1, IndexFamily::shapley_shubik),
                   Errc::bad_part_count);
  CHECK_FAILS_WITH(search_beneficial_split(g, 9, 2, IndexFamily::shapley_shubik),
                   Errc::index_out_of_range);
}

TEST_CASE("first-hit and best-margin searches agree on the verdict") {
  Rng rng(105);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedVotingGame g = random_game(rng, 6, 8);
    int i = rng.range(1, g.player_count());
    int m = rng.range(2, 4);
    ManipulationVerdict first =
        search_beneficial_split(g, i, m, IndexFamily::shapley_shubik);
    ManipulationVerdict best = search_beneficial_split(
        g, i, m, IndexFamily::shapley_shubik, SearchMode::best_margin);
    CHECK(first.beneficial == best.beneficial);
    CHECK(best.margin >= first.margin);
    if (!first.beneficial) CHECK(best.margin == first.margin);
  }
}

TEST_CASE("partition caps stop a split search before it starts") {
  Limits tight;
  tight.max_partitions = 3;
  CHECK_FAILS_WITH(search_beneficial_split(WeightedVotingGame({12, 1}, 10), 1, 6,
                                           IndexFamily::probabilistic_banzhaf,
                                           SearchMode::first_hit, tight),
                   Errc::resource_limit);
  CHECK_FAILS_WITH(enumerate_partitions(12, 6, tight), Errc::resource_limit);
}
