#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <utility>
#include <vector>

#include "wvg/generate.hpp"
#include "wvg/random.hpp"
#include "wvg/reductions.hpp"

#include "support/helpers.hpp"

using namespace wvg;

TEST_CASE("instance validation") {
  CHECK_FAILS_WITH(SubsetSumInstance({}, 1), Errc::invalid_instance);
  CHECK_FAILS_WITH(SubsetSumInstance({1, 0}, 1), Errc::invalid_instance);
  CHECK_FAILS_WITH(SubsetSumInstance({1}, 0), Errc::invalid_instance);
  CHECK(SubsetSumInstance({1, 2, 3}, 6).alpha() == 6);

  // Comparison sides may use the full value total as a target, but no more —
  // the folding construction relies on that bound.
  CHECK(CompareInstance(SubsetSumInstance({1, 1}, 1), SubsetSumInstance({1, 2}, 3))
            .right()
            .target() == 3);
  CHECK_FAILS_WITH(CompareInstance(SubsetSumInstance({1}, 2), SubsetSumInstance({2}, 1)),
                   Errc::invalid_instance);
  CHECK(CompareRInstance({1, 2}, 1, 3).q2() == 3);
  CHECK_FAILS_WITH(CompareRInstance({1, 2}, 0, 1), Errc::invalid_instance);
  CHECK(CompareRInstance({1, 2}, 1, 2).alpha() == 3);

  CHECK_FAILS_WITH(RRInstance({1, 2, 4}), Errc::odd_total);
  CHECK_FAILS_WITH(RRInstance({2, 2}), Errc::invalid_instance);
  RRInstance rr({2, 2, 4});
  CHECK(rr.alpha() == 8);
  CHECK(rr.target_low() == 2);
  CHECK(rr.target_high() == 3);
  CHECK_FALSE(rr.flipped());
  CHECK(RRInstance({2, 2, 4}, true).flipped());

  CHECK_FAILS_WITH(X3CInstance(4, {{1, 2, 3}}), Errc::invalid_instance);
  CHECK_FAILS_WITH(X3CInstance(3, {}), Errc::invalid_instance);
  CHECK_FAILS_WITH(X3CInstance(3, {{1, 2, 4}}), Errc::index_out_of_range);
  CHECK_FAILS_WITH(X3CInstance(3, {{1, 2, 2}}), Errc::invalid_instance);
  CHECK(X3CInstance(6, {{1, 2, 3}, {4, 5, 6}}).cover_size() == 2);
}

TEST_CASE("subset-sum counting and the comparison deciders") {
  CHECK(count_subset_sum(SubsetSumInstance({1, 2, 3}, 3)) == 2);
  CHECK(count_subset_sum(SubsetSumInstance({8, 8}, 8)) == 2);
  CHECK(count_subset_sum(SubsetSumInstance({1, 2}, 9)) == 0);

  CHECK(decide_compare(CompareInstance(SubsetSumInstance({1, 2, 3}, 3),
                                       SubsetSumInstance({1, 2}, 2))));
  CHECK_FALSE(decide_compare(CompareInstance(SubsetSumInstance({1, 2}, 2),
                                             SubsetSumInstance({1, 2, 3}, 3))));

  CHECK(decide_compare_r(CompareRInstance({1, 2, 3}, 3, 4)));
  CHECK_FALSE(decide_compare_r(CompareRInstance({1, 2, 3}, 4, 3)));

  // (2,2,4): two subsets hit 2, none hit 3.
  CHECK(decide_rr(RRInstance({2, 2, 4})));
  CHECK_FALSE(decide_rr(RRInstance({2, 2, 4}, true)));
}

TEST_CASE("comparison folding keeps both counts") {
  CompareInstance in(SubsetSumInstance({1, 1}, 1), SubsetSumInstance({1, 2}, 3));
  auto [out, cert] = reduce_compare_to_r(in, true);
  CHECK(out.values() == std::vector<BigInt>{1, 1, 4, 8});
  CHECK(out.q1() == 1);
  CHECK(out.q2() == 12);
  CHECK(cert.verified);
  CHECK(cert.counts_in == std::vector<BigInt>{2, 1});
  CHECK(cert.counts_out == std::vector<BigInt>{2, 1});
  CHECK(cert.counts_preserved());

  CompareInstance other(SubsetSumInstance({1, 2}, 2), SubsetSumInstance({1, 1}, 2));
  auto [out2, cert2] = reduce_compare_to_r(other, true);
  CHECK(out2.values() == std::vector<BigInt>{1, 2, 6, 6});
  CHECK(out2.q1() == 2);
  CHECK(out2.q2() == 12);
  CHECK(cert2.counts_preserved());

  // Without the verify flag the certificate carries nothing but passes.
  auto [out3, cert3] = reduce_compare_to_r(in, false);
  CHECK_FALSE(cert3.verified);
  CHECK(cert3.counts_in.empty());
  CHECK(cert3.counts_preserved());
  CHECK(out3.values() == out.values());
}

TEST_CASE("times-8 normalization scales values and targets together") {
  CompareRInstance in({1, 1, 4, 8}, 1, 12);
  CompareRInstance once = normalize_times8(in);
  CHECK(once.values() == std::vector<BigInt>{8, 8, 32, 64});
  CHECK(once.q1() == 8);
  CHECK(once.q2() == 96);

  CompareRInstance twice = normalize_times8(once);
  for (std::size_t i = 0; i < in.values().size(); ++i) {
    CHECK(twice.values()[i] == 64 * in.values()[i]);
  }
  CHECK(twice.q1() == 64 * in.q1());
  CHECK(twice.q2() == 64 * in.q2());

  // Counts at the scaled targets are untouched.
  CHECK(count_subsets_enum(once.values(), once.q1()) ==
        count_subsets_enum(in.values(), in.q1()));
  CHECK(count_subsets_enum(once.values(), once.q2()) ==
        count_subsets_enum(in.values(), in.q2()));
}

TEST_CASE("target pinning appends the four balancing values") {
  CompareRInstance in({8, 8}, 8, 16);
  auto [out, cert] = reduce_r_to_rr(in, false, true);
  CHECK(out.values() == std::vector<BigInt>{8, 8, 24, 17, 59, 48});
  CHECK(out.alpha() == 10 * in.alpha() + 4);
  CHECK(out.target_low() == 80);
  CHECK(out.target_high() == 81);
  CHECK_FALSE(out.flipped());
  CHECK(cert.counts_in == std::vector<BigInt>{2, 1});
  CHECK(cert.counts_out == std::vector<BigInt>{2, 1});
  CHECK(cert.counts_preserved());
  CHECK(decide_rr(out) == decide_compare_r(in));

  // Flipping swaps which target the appended values protect.
  auto [flipped, cert_f] = reduce_r_to_rr(in, true, true);
  CHECK(flipped.flipped());
  CHECK(flipped.values() == std::vector<BigInt>{8, 8, 16, 25, 59, 48});
  CHECK(cert_f.counts_in == std::vector<BigInt>{1, 2});
  CHECK(cert_f.counts_preserved());
  CHECK(decide_rr(flipped) == decide_compare_r(in));

  CHECK_FAILS_WITH(reduce_r_to_rr(CompareRInstance({1, 2}, 1, 2)),
                   Errc::not_divisible_by_8);
  CHECK_FAILS_WITH(reduce_r_to_rr(CompareRInstance({8, 8}, 4, 8)),
                   Errc::not_divisible_by_8);
}

TEST_CASE("full chain preserves counts on random comparisons") {
  Rng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    CompareInstance in = random_compare(rng, 6, 9);
    bool expected = decide_compare(in);

    auto [r, cert_r] = reduce_compare_to_r(in, true);
    CHECK(cert_r.counts_preserved());

    CompareRInstance scaled = normalize_times8(r);
    for (bool flip : {false, true}) {
      auto [rr, cert_rr] = reduce_r_to_rr(scaled, flip, true);
      CHECK(cert_rr.counts_preserved());
      CHECK(rr.values().size() == r.values().size() + 4);
      CHECK(decide_rr(rr) == expected);
    }
  }
}

TEST_CASE("gadget constructions on pinned instances") {
  auto [merge_game, merge_spec] = rr_to_banzhaf_merge(RRInstance({2, 2, 4}));
  CHECK(merge_game == WeightedVotingGame({4, 4, 8, 1, 1, 1, 1}, 8));
  CHECK(merge_spec.coalition == Coalition({5, 6, 7}));
  CHECK_FAILS_WITH(rr_to_banzhaf_merge(RRInstance({2, 2, 4}, true)),
                   Errc::wrong_variant);

  SplitGadget split_gadget = rr_to_banzhaf_split(RRInstance({1, 2, 2, 3}, true));
  CHECK(split_gadget.game == WeightedVotingGame({2, 4, 4, 6, 1, 3}, 8));
  CHECK(split_gadget.player == 6);
  CHECK(split_gadget.m == 3);
  CHECK_FAILS_WITH(rr_to_banzhaf_split(RRInstance({1, 2, 2, 3})),
                   Errc::wrong_variant);

  auto [ss_game, ss_spec] = rr_to_shapley_merge(RRInstance({2, 2, 4}));
  CHECK(ss_game == WeightedVotingGame({2, 2, 4, 1, 1}, 4));
  CHECK(ss_spec.coalition == Coalition({4, 5}));
  CHECK_FAILS_WITH(rr_to_shapley_merge(RRInstance({2, 2, 4}, true)),
                   Errc::wrong_variant);
}

TEST_CASE("margin identities on pinned instances") {
  RRInstance inst({2, 2, 4});

  auto [direct_b, formula_b] = verify_banzhaf_merge_identity(inst);
  CHECK(direct_b == Rational(1, 32));
  CHECK(formula_b == Rational(1, 32));
  CHECK(banzhaf_merge_margin_from_counts(3, 2, 0) == Rational(1, 32));

  auto [direct_s, formula_s] = verify_shapley_merge_identity(inst);
  CHECK(direct_s == Rational(1, 30));
  CHECK(formula_s == Rational(1, 30));
  CHECK(shapley_merge_margin_from_strata(3, {0, 2}, {}) == Rational(1, 30));
}

TEST_CASE("margin identities hold on random restricted instances") {
  Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    RRInstance inst = random_rr(rng, 7, 10, false);
    auto [direct_b, formula_b] = verify_banzhaf_merge_identity(inst);
    CHECK(direct_b == formula_b);
    auto [direct_s, formula_s] = verify_shapley_merge_identity(inst);
    CHECK(direct_s == formula_s);

    // The merge is beneficial exactly when the comparison holds...
    auto [game, spec] = rr_to_banzhaf_merge(inst);
    CHECK(is_beneficial_merge(game, spec, IndexFamily::probabilistic_banzhaf).beneficial ==
          decide_rr(inst));

    // ...and the flipped split gadget mirrors the flipped comparison.
    RRInstance flipped(inst.values(), true);
    SplitGadget g = rr_to_banzhaf_split(flipped);
    ManipulationVerdict v = search_beneficial_split(
        g.game, g.player, g.m, IndexFamily::probabilistic_banzhaf);
    CHECK(v.beneficial == decide_rr(flipped));
  }
}

TEST_CASE("grouped margin formula matches the by-cardinality counter") {
  Rng rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    RRInstance inst = random_rr(rng, 7, 10, false);
    std::size_t n = inst.values().size();
    std::vector<BigInt> y = count_subsets_enum_by_card(inst.values(), inst.target_low());
    std::vector<BigInt> x = count_subsets_enum_by_card(inst.values(), inst.target_high());
    auto [direct, formula] = verify_shapley_merge_identity(inst);
    CHECK(shapley_merge_margin_from_strata(n, y, x) == formula);
    CHECK(shapley_merge_margin_from_strata(n, y, x) == direct);
  }
}

TEST_CASE("exact-cover counting") {
  CHECK(count_x3c(X3CInstance(3, {{1, 2, 3}})) == 1);
  CHECK(count_x3c(X3CInstance(3, {{1, 2, 3}, {1, 2, 3}})) == 2);
  CHECK(count_x3c(X3CInstance(6, {{1, 2, 3}, {4, 5, 6}, {1, 2, 4}})) == 1);
  CHECK(count_x3c(X3CInstance(6, {{1, 2, 3}, {1, 2, 4}})) == 0);
  // More sets than the enumerator accepts.
  std::vector<std::array<int, 3>> big(21, {1, 2, 3});
  CHECK_FAILS_WITH(count_x3c(X3CInstance(3, big)), Errc::too_large);
}

TEST_CASE("digit encoding of exact cover") {
  auto [single, cert1] = reduce_x3c_to_subsetsum(X3CInstance(3, {{1, 2, 3}}), true);
  CHECK(single.values() == std::vector<BigInt>{7});
  CHECK(single.target() == 7);
  CHECK(cert1.counts_in == std::vector<BigInt>{1});
  CHECK(cert1.counts_preserved());

  auto [doubled, cert2] =
      reduce_x3c_to_subsetsum(X3CInstance(3, {{1, 2, 3}, {1, 2, 3}}), true);
  CHECK(doubled.values() == std::vector<BigInt>{13, 13});
  CHECK(doubled.target() == 13);
  CHECK(cert2.counts_in == std::vector<BigInt>{2});
  CHECK(cert2.counts_preserved());
}

TEST_CASE("digit encoding is parsimonious on random instances") {
  Rng rng(204);
  for (int trial = 0; trial < 40; ++trial) {
    X3CInstance inst = random_x3c(rng, rng.range(1, 3), 8);
    auto [out, cert] = reduce_x3c_to_subsetsum(inst, true);
    CHECK(cert.counts_preserved());
    CHECK(cert.counts_in == std::vector<BigInt>{count_x3c(inst)});

    // Every solution uses exactly cover_size sets.
    std::vector<BigInt> by_card = count_subsets_enum_by_card(out.values(), out.target());
    BigInt total = 0;
    for (std::size_t k = 0; k < by_card.size(); ++k) {
      total += by_card[k];
      if (BigInt(0) != by_card[k]) {
        CHECK(k == static_cast<std::size_t>(inst.cover_size()));
      }
    }
    CHECK(total == count_x3c(inst));
  }
}
