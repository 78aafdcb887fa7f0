#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/random.hpp"

#include "support/helpers.hpp"

using namespace wvg;

TEST_CASE("game construction validates invariants") {
  WeightedVotingGame minimal({1}, 1);
  CHECK(minimal.player_count() == 1);
  CHECK(minimal.total_weight() == 1);

  WeightedVotingGame g({2, 1, 1}, 3);
  CHECK(g.player_count() == 3);
  CHECK(g.total_weight() == 4);
  CHECK(g.weight(1) == 2);

  CHECK_FAILS_WITH(WeightedVotingGame({1, 1}, 3), Errc::quota_out_of_range);
  CHECK_FAILS_WITH(WeightedVotingGame({1, 1}, 0), Errc::quota_out_of_range);
  CHECK_FAILS_WITH(WeightedVotingGame({1, 1}, -2), Errc::quota_out_of_range);
  CHECK_FAILS_WITH(WeightedVotingGame({1, -1}, 1), Errc::negative_weight);
  CHECK_FAILS_WITH(WeightedVotingGame({}, 1), Errc::empty_player_list);

  // Zero weights are fine as long as something is positive.
  WeightedVotingGame zeros({0, 3, 0}, 2);
  CHECK(zeros.total_weight() == 3);
}

TEST_CASE("coalitions are sorted distinct 1-based index sets") {
  Coalition c({3, 1});
  CHECK(c.members() == std::vector<int>{1, 3});
  CHECK(c.contains(3));
  CHECK(!c.contains(2));
  CHECK(Coalition::empty().is_empty());
  CHECK(Coalition::full(3).members() == std::vector<int>{1, 2, 3});

  CHECK_FAILS_WITH(Coalition({0}), Errc::index_out_of_range);
  CHECK_FAILS_WITH(Coalition({2, 2}), Errc::index_out_of_range);
}

TEST_CASE("coalition weight and the valuation") {
  WeightedVotingGame g({2, 1, 1}, 3);
  CHECK(g.coalition_weight(Coalition({1, 3})) == 3);
  CHECK(g.coalition_weight(Coalition::empty()) == 0);
  CHECK(g.wins(Coalition({1, 2})));
  CHECK(!g.wins(Coalition({2, 3})));
  CHECK(g.wins(Coalition::full(3)));
  CHECK_FAILS_WITH(g.coalition_weight(Coalition({1, 4})), Errc::index_out_of_range);

  WeightedVotingGame lemma_game({8, 8, 24, 17, 59, 48}, 82);
  CHECK(lemma_game.coalition_weight(Coalition({3, 6})) == 72);
}

TEST_CASE("valuation is monotone and anchored for random games") {
  Rng rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.range(1, 10);
    std::vector<BigInt> weights;
    long total = 0;
    for (int i = 0; i < n; ++i) {
      int w = rng.range(0, 9);
      weights.emplace_back(w);
      total += w;
    }
    if (total == 0) {
      weights[0] = 1;
      total = 1;
    }
    WeightedVotingGame g(std::move(weights),
                         static_cast<long>(rng.below(static_cast<std::uint64_t>(total)) + 1));

    CHECK(!g.wins(Coalition::empty()));
    CHECK(g.wins(Coalition::full(n)));

    // Adding any one player never turns a winning coalition into a losing
    // one; that pairwise step implies full monotonicity.
    std::uint32_t subsets = std::uint32_t(1) << n;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      std::vector<int> members;
      for (int p = 1; p <= n; ++p) {
        if (mask >> (p - 1) & 1) members.push_back(p);
      }
      if (!g.wins(Coalition(members))) continue;
      for (int p = 1; p <= n; ++p) {
        if (mask >> (p - 1) & 1) continue;
        std::vector<int> extended = members;
        extended.push_back(p);
        CHECK(g.wins(Coalition(extended)));
      }
    }
  }
}
