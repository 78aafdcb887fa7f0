#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wvg/counting.hpp"
#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/indices.hpp"
#include "wvg/limits.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// Subset-sum counting instance: positive values, target >= 1. Targets above
/// the value total are representable and simply have count 0 (the digit
/// encoding of uncoverable exact-cover instances produces them).
class SubsetSumInstance {
 public:
  SubsetSumInstance(std::vector<BigInt> values, BigInt target)
      : values_(std::move(values)), target_(std::move(target)) {
    if (values_.empty()) {
      fail(Errc::invalid_instance, "subset-sum instance needs at least one value");
    }
    for (const BigInt& v : values_) {
      if (v <= 0) fail(Errc::invalid_instance, "subset-sum values must be positive");
      alpha_ += v;
    }
    if (target_ < 1) {
      fail(Errc::invalid_instance, "subset-sum target must be at least 1");
    }
  }

  const std::vector<BigInt>& values() const { return values_; }
  const BigInt& target() const { return target_; }
  /// Total of all values.
  const BigInt& alpha() const { return alpha_; }

 private:
  std::vector<BigInt> values_;
  BigInt target_;
  BigInt alpha_ = 0;
};

/// Two subset-sum instances whose solution counts are to be compared. Each
/// side's target must not exceed its value total: the folding construction
/// below keeps left solutions pure only because every scaled right value
/// strictly exceeds the left target.
class CompareInstance {
 public:
  CompareInstance(SubsetSumInstance left, SubsetSumInstance right)
      : left_(std::move(left)), right_(std::move(right)) {
    check_side(left_, "left");
    check_side(right_, "right");
  }

  const SubsetSumInstance& left() const { return left_; }
  const SubsetSumInstance& right() const { return right_; }

 private:
  static void check_side(const SubsetSumInstance& side, const char* which) {
    if (side.target() > side.alpha()) {
      fail(Errc::invalid_instance,
           std::string(which) + " target must be at most the value total (got " +
               to_string(side.target()) + " of " + to_string(side.alpha()) + ")");
    }
  }

  SubsetSumInstance left_;
  SubsetSumInstance right_;
};

/// One value sequence, two targets: compare count(A, q1) against count(A, q2).
/// Targets only need to be positive — the folding step can legitimately emit
/// q2 equal to the value total, and the target-pinning case analysis below
/// needs no upper bound beyond the positivity of its appended values.
class CompareRInstance {
 public:
  CompareRInstance(std::vector<BigInt> values, BigInt q1, BigInt q2)
      : values_(std::move(values)), q1_(std::move(q1)), q2_(std::move(q2)) {
    if (values_.empty()) {
      fail(Errc::invalid_instance, "instance needs at least one value");
    }
    for (const BigInt& v : values_) {
      if (v <= 0) fail(Errc::invalid_instance, "values must be positive");
      alpha_ += v;
    }
    if (q1_ < 1 || q2_ < 1) {
      fail(Errc::invalid_instance, "targets must be at least 1, got " +
                                       to_string(q1_) + " and " + to_string(q2_));
    }
  }

  const std::vector<BigInt>& values() const { return values_; }
  const BigInt& q1() const { return q1_; }
  const BigInt& q2() const { return q2_; }
  const BigInt& alpha() const { return alpha_; }

 private:
  std::vector<BigInt> values_;
  BigInt q1_;
  BigInt q2_;
  BigInt alpha_ = 0;
};

/// The fully restricted comparison: targets are pinned to total/2 - 2 versus
/// total/2 - 1. `flipped` reverses which side must be strictly larger (the
/// variant the split construction consumes).
class RRInstance {
 public:
  explicit RRInstance(std::vector<BigInt> values, bool flipped = false)
      : values_(std::move(values)), flipped_(flipped) {
    if (values_.empty()) {
      fail(Errc::invalid_instance, "instance needs at least one value");
    }
    for (const BigInt& v : values_) {
      if (v <= 0) fail(Errc::invalid_instance, "values must be positive");
      alpha_ += v;
    }
    if (alpha_ % 2 != 0) {
      fail(Errc::odd_total, "value total must be even, got " + to_string(alpha_));
    }
    if (alpha_ < 6) {
      fail(Errc::invalid_instance,
           "value total must be at least 6 so both targets are positive");
    }
  }

  const std::vector<BigInt>& values() const { return values_; }
  bool flipped() const { return flipped_; }
  const BigInt& alpha() const { return alpha_; }
  /// The smaller target, total/2 - 2.
  BigInt target_low() const { return alpha_ / 2 - 2; }
  /// The larger target, total/2 - 1.
  BigInt target_high() const { return alpha_ / 2 - 1; }

 private:
  std::vector<BigInt> values_;
  bool flipped_;
  BigInt alpha_ = 0;
};

/// Exact cover by 3-sets: a base {1,...,3k} and a family of 3-element subsets.
class X3CInstance {
 public:
  X3CInstance(int base_size, std::vector<std::array<int, 3>> family)
      : base_size_(base_size), family_(std::move(family)) {
    if (base_size_ <= 0 || base_size_ % 3 != 0) {
      fail(Errc::invalid_instance,
           "base size must be a positive multiple of 3, got " +
               std::to_string(base_size_));
    }
    if (family_.empty()) {
      fail(Errc::invalid_instance, "family needs at least one set");
    }
    for (const auto& set : family_) {
      for (int b : set) {
        if (b < 1 || b > base_size_) {
          fail(Errc::index_out_of_range,
               "set element " + std::to_string(b) + " outside base of size " +
                   std::to_string(base_size_));
        }
      }
      if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2]) {
        fail(Errc::invalid_instance, "set elements must be distinct");
      }
    }
  }

  int base_size() const { return base_size_; }
  /// Number of sets a cover must use: base_size / 3.
  int cover_size() const { return base_size_ / 3; }
  const std::vector<std::array<int, 3>>& family() const { return family_; }

 private:
  int base_size_;
  std::vector<std::array<int, 3>> family_;
};

/// Count-preservation evidence attached to a reduction output on request:
/// solution counts of the input and output instances on matched targets.
/// Position j of counts_in and counts_out must agree.
struct ReductionCertificate {
  bool verified = false;
  std::vector<BigInt> targets_in;
  std::vector<BigInt> counts_in;
  std::vector<BigInt> targets_out;
  std::vector<BigInt> counts_out;

  bool counts_preserved() const {
    return !verified || counts_in == counts_out;
  }
};

/// Number of subsets of the instance's values summing to the target, by the
/// truncated counting DP. A target beyond the value total has count 0.
inline BigInt count_subset_sum(const SubsetSumInstance& inst,
                               const Limits& limits = Limits::defaults()) {
  if (inst.target() > inst.alpha()) return 0;
  return count_subsets_dp(inst.values(), inst.target(), limits);
}

/// Strictly more solutions on the left than on the right?
inline bool decide_compare(const CompareInstance& inst,
                           const Limits& limits = Limits::defaults()) {
  return count_subset_sum(inst.left(), limits) >
         count_subset_sum(inst.right(), limits);
}

/// count(A, q1) strictly greater than count(A, q2)?
inline bool decide_compare_r(const CompareRInstance& inst,
                             const Limits& limits = Limits::defaults()) {
  return count_subsets_dp(inst.values(), inst.q1(), limits) >
         count_subsets_dp(inst.values(), inst.q2(), limits);
}

/// The restricted comparison: count at total/2 - 2 versus count at
/// total/2 - 1, reversed when the instance is flipped.
inline bool decide_rr(const RRInstance& inst,
                      const Limits& limits = Limits::defaults()) {
  BigInt low = count_subsets_dp(inst.values(), inst.target_low(), limits);
  BigInt high = count_subsets_dp(inst.values(), inst.target_high(), limits);
  return inst.flipped() ? high > low : low > high;
}

namespace detail {

/// Enumeration-based counts for certificates; independent of the DP.
inline BigInt certificate_count(const std::vector<BigInt>& values, const BigInt& target) {
  return count_subsets_enum(values, target);
}

}  // namespace detail

/// Fold a two-instance comparison into one value sequence with two targets:
/// keep the left values as-is and scale the right values by twice the left
/// total. Left solutions hit q1 untouched; any subset hitting the scaled q2
/// can only use scaled values (unscaled ones cannot fill a multiple of the
/// doubled total), so right solutions are preserved too.
inline std::pair<CompareRInstance, ReductionCertificate> reduce_compare_to_r(
    const CompareInstance& inst, bool verify = false) {
  const BigInt& alpha_left = inst.left().alpha();
  BigInt scale = 2 * alpha_left;

  std::vector<BigInt> values = inst.left().values();
  values.reserve(values.size() + inst.right().values().size());
  for (const BigInt& y : inst.right().values()) values.push_back(scale * y);

  CompareRInstance out(std::move(values), inst.left().target(),
                       scale * inst.right().target());

  ReductionCertificate cert;
  if (verify) {
    cert.verified = true;
    cert.targets_in = {inst.left().target(), inst.right().target()};
    cert.counts_in = {
        detail::certificate_count(inst.left().values(), inst.left().target()),
        detail::certificate_count(inst.right().values(), inst.right().target())};
    cert.targets_out = {out.q1(), out.q2()};
    cert.counts_out = {detail::certificate_count(out.values(), out.q1()),
                       detail::certificate_count(out.values(), out.q2())};
  }
  return {std::move(out), std::move(cert)};
}

/// Scale every value and both targets by 8. Solution index sets are
/// unchanged; afterwards everything is divisible by 8 as the next step needs.
inline CompareRInstance normalize_times8(const CompareRInstance& inst) {
  std::vector<BigInt> values;
  values.reserve(inst.values().size());
  for (const BigInt& v : inst.values()) values.push_back(8 * v);
  return CompareRInstance(std::move(values), 8 * inst.q1(), 8 * inst.q2());
}

/// Pin the two targets to fixed offsets from half the total: append the four
/// values 2a - q1, 2a + 1 - q2, 2a + 3 + q1 + q2, 3a (a = input total), giving
/// total 10a + 4, so that subsets hitting 5a = total/2 - 2 are exactly the q1
/// solutions (plus the 1st and 4th extras) and subsets hitting 5a + 1 =
/// total/2 - 1 are exactly the q2 solutions (plus the 2nd and 4th extras).
/// The case analysis that rules everything else out needs values and targets
/// divisible by 8; apply normalize_times8 first. With `flipped` set, q1 and
/// q2 swap roles and the output carries the reversed-comparison flag.
inline std::pair<RRInstance, ReductionCertificate> reduce_r_to_rr(
    const CompareRInstance& inst, bool flipped = false, bool verify = false) {
  for (const BigInt& v : inst.values()) {
    if (v % 8 != 0) {
      fail(Errc::not_divisible_by_8, "value " + to_string(v) +
                                         " not divisible by 8; normalize first");
    }
  }
  if (inst.q1() % 8 != 0 || inst.q2() % 8 != 0) {
    fail(Errc::not_divisible_by_8, "targets must be divisible by 8; normalize first");
  }

  const BigInt& alpha = inst.alpha();
  const BigInt& q1 = flipped ? inst.q2() : inst.q1();
  const BigInt& q2 = flipped ? inst.q1() : inst.q2();

  std::vector<BigInt> values = inst.values();
  values.reserve(values.size() + 4);
  values.push_back(2 * alpha - q1);
  values.push_back(2 * alpha + 1 - q2);
  values.push_back(2 * alpha + 3 + q1 + q2);
  values.push_back(3 * alpha);
  RRInstance out(std::move(values), flipped);

  ReductionCertificate cert;
  if (verify) {
    cert.verified = true;
    cert.targets_in = {q1, q2};
    cert.counts_in = {detail::certificate_count(inst.values(), q1),
                      detail::certificate_count(inst.values(), q2)};
    cert.targets_out = {out.target_low(), out.target_high()};
    cert.counts_out = {
        detail::certificate_count(out.values(), out.target_low()),
        detail::certificate_count(out.values(), out.target_high())};
  }
  return {std::move(out), std::move(cert)};
}

/// The merge gadget: game (2a_1, ..., 2a_n, 1, 1, 1, 1; a) with a = value
/// total, merging the coalition of the last three weight-1 players. Doubling
/// the values makes any winning coalition's composition readable off its
/// parity, which is what pins the merged player's pivot count to the two
/// subset-sum counts: the merge is beneficial iff count(A, a/2 - 2) >
/// count(A, a/2 - 1), and the margin is exactly their difference over 2^(n+3).
inline std::pair<WeightedVotingGame, MergeSpec> rr_to_banzhaf_merge(const RRInstance& inst) {
  if (inst.flipped()) {
    fail(Errc::wrong_variant, "merge gadget needs the unflipped comparison");
  }
  int n = static_cast<int>(inst.values().size());
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(n) + 4);
  for (const BigInt& a : inst.values()) weights.push_back(2 * a);
  for (int j = 0; j < 4; ++j) weights.push_back(1);
  WeightedVotingGame game(std::move(weights), inst.alpha());
  MergeSpec spec{Coalition({n + 2, n + 3, n + 4})};
  return {std::move(game), std::move(spec)};
}

/// The split gadget's output: which player of the game splits into how many
/// identities.
struct SplitGadget {
  WeightedVotingGame game;
  int player;
  int m;
};

/// The split gadget: game (2a_1, ..., 2a_n, 1, 3; a), splitting the weight-3
/// player into m = 3 identities. The only positive partition of 3 that can
/// help is (1,1,1) — it reproduces the merge gadget's game — and it is
/// beneficial iff count(A, a/2 - 1) > count(A, a/2 - 2), i.e. iff the flipped
/// comparison holds. Larger m only adds zero-weight identities.
inline SplitGadget rr_to_banzhaf_split(const RRInstance& inst) {
  if (!inst.flipped()) {
    fail(Errc::wrong_variant, "split gadget needs the flipped comparison");
  }
  int n = static_cast<int>(inst.values().size());
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(n) + 2);
  for (const BigInt& a : inst.values()) weights.push_back(2 * a);
  weights.push_back(1);
  weights.push_back(3);
  WeightedVotingGame game(std::move(weights), inst.alpha());
  return SplitGadget{std::move(game), n + 2, 3};
}

/// The order-sensitive merge gadget: game (a_1, ..., a_n, 1, 1; a/2), merging
/// the two weight-1 players. Values are not doubled here; the two unit
/// players' joint pivot structure is resolved by cardinality instead of
/// parity, which is why the margin is the cardinality-grouped sum below.
inline std::pair<WeightedVotingGame, MergeSpec> rr_to_shapley_merge(const RRInstance& inst) {
  if (inst.flipped()) {
    fail(Errc::wrong_variant, "merge gadget needs the unflipped comparison");
  }
  int n = static_cast<int>(inst.values().size());
  std::vector<BigInt> weights = inst.values();
  weights.push_back(1);
  weights.push_back(1);
  WeightedVotingGame game(std::move(weights), inst.alpha() / 2);
  MergeSpec spec{Coalition({n + 1, n + 2})};
  return {std::move(game), std::move(spec)};
}

/// Closed form for the merge gadget's margin: (Y - X) / 2^(n+3), where Y and
/// X are the subset counts at total/2 - 2 and total/2 - 1 and n is the number
/// of values.
inline Rational banzhaf_merge_margin_from_counts(std::size_t n, const BigInt& y,
                                                 const BigInt& x) {
  return Rational(y - x, pow2(n + 3));
}

/// Closed form for the order-sensitive merge gadget's margin from
/// per-cardinality counts: sum over k of k! (n-k)! / (n+2)! * (n - 2k) *
/// (Y_k - X_k), where Y_k and X_k count the size-k subsets hitting
/// total/2 - 2 and total/2 - 1. Index c of each vector is the count at
/// cardinality c (shorter vectors are padded with zeros).
inline Rational shapley_merge_margin_from_strata(std::size_t n,
                                                 const std::vector<BigInt>& y_by_card,
                                                 const std::vector<BigInt>& x_by_card) {
  auto at = [](const std::vector<BigInt>& v, std::size_t k) {
    static const BigInt zero = 0;
    return k < v.size() ? v[k] : zero;
  };
  BigInt numerator = 0;
  BigInt coef_n = static_cast<long>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt diff = at(y_by_card, k) - at(x_by_card, k);
    if (diff == 0) continue;
    numerator += factorial(k) * factorial(n - k) * (coef_n - 2 * BigInt(k)) * diff;
  }
  return Rational(numerator, factorial(n + 2));
}

/// Compute the merge gadget's margin twice — directly through the power
/// indices, and through the closed-form count difference — and return both.
/// They must be equal; a mismatch means a defect in one of the two paths.
inline std::pair<Rational, Rational> verify_banzhaf_merge_identity(
    const RRInstance& inst, const Limits& limits = Limits::defaults()) {
  auto [game, spec] = rr_to_banzhaf_merge(inst);
  Rational direct =
      is_beneficial_merge(game, spec, IndexFamily::probabilistic_banzhaf, limits).margin;

  WeightCountTable table = build_value_table(inst.values(), limits);
  Rational formula = banzhaf_merge_margin_from_counts(
      inst.values().size(), table.count(inst.target_low()),
      table.count(inst.target_high()));
  return {std::move(direct), std::move(formula)};
}

/// Same dual computation for the order-sensitive gadget, against the
/// cardinality-grouped closed form.
inline std::pair<Rational, Rational> verify_shapley_merge_identity(
    const RRInstance& inst, const Limits& limits = Limits::defaults()) {
  RRInstance unflipped = inst.flipped() ? RRInstance(inst.values(), false) : inst;
  auto [game, spec] = rr_to_shapley_merge(unflipped);
  Rational direct =
      is_beneficial_merge(game, spec, IndexFamily::shapley_shubik, limits).margin;

  WeightCardTable table = build_value_card_table(inst.values(), limits);
  std::size_t n = inst.values().size();
  std::vector<BigInt> y_by_card(n + 1, BigInt(0));
  std::vector<BigInt> x_by_card(n + 1, BigInt(0));
  for (std::size_t k = 0; k <= n; ++k) {
    y_by_card[k] = table.count(inst.target_low(), k);
    x_by_card[k] = table.count(inst.target_high(), k);
  }
  Rational formula = shapley_merge_margin_from_strata(n, y_by_card, x_by_card);
  return {std::move(direct), std::move(formula)};
}

/// Number of subfamilies that cover the base exactly, by enumeration with
/// disjointness pruning. Refuses families of more than 20 sets.
inline BigInt count_x3c(const X3CInstance& inst) {
  if (inst.family().size() > 20) {
    fail(Errc::too_large, "exact-cover enumeration capped at 20 sets");
  }
  // A family of m sets covers at most 3m elements.
  if (inst.base_size() > 3 * static_cast<int>(inst.family().size())) return 0;

  std::vector<std::uint64_t> masks;
  masks.reserve(inst.family().size());
  for (const auto& set : inst.family()) {
    std::uint64_t mask = 0;
    for (int b : set) mask |= std::uint64_t(1) << (b - 1);
    masks.push_back(mask);
  }
  std::uint64_t full = inst.base_size() == 64
                           ? ~std::uint64_t(0)
                           : (std::uint64_t(1) << inst.base_size()) - 1;

  BigInt covers = 0;
  auto walk = [&](auto&& self, std::size_t i, std::uint64_t covered) -> void {
    if (covered == full) {
      ++covers;
      return;
    }
    if (i == masks.size()) return;
    if (!(covered & masks[i])) self(self, i + 1, covered | masks[i]);
    self(self, i + 1, covered);
  };
  walk(walk, 0, 0);
  return covers;
}

/// Digit-encode an exact-cover instance as subset-sum: in base b = family
/// size + 1, set j becomes the value with a 1-digit at each of its elements,
/// and the target has a 1-digit everywhere. No element appears in more than
/// b - 1 sets, so digit positions never carry, and subsets hitting the target
/// are exactly the exact covers — count-preserving, and every solution uses
/// exactly base_size / 3 sets.
inline std::pair<SubsetSumInstance, ReductionCertificate> reduce_x3c_to_subsetsum(
    const X3CInstance& inst, bool verify = false) {
  BigInt base = static_cast<std::uint64_t>(inst.family().size()) + 1;

  // power[b-1] = base^(b-1) for base elements b = 1..base_size.
  std::vector<BigInt> power(static_cast<std::size_t>(inst.base_size()));
  BigInt p = 1;
  for (std::size_t b = 0; b < power.size(); ++b) {
    power[b] = p;
    p *= base;
  }

  std::vector<BigInt> values;
  values.reserve(inst.family().size());
  for (const auto& set : inst.family()) {
    BigInt v = 0;
    for (int b : set) v += power[static_cast<std::size_t>(b - 1)];
    values.push_back(std::move(v));
  }
  BigInt target = 0;
  for (const BigInt& digit : power) target += digit;
  SubsetSumInstance out(std::move(values), std::move(target));

  ReductionCertificate cert;
  if (verify) {
    cert.verified = true;
    cert.targets_in = {BigInt(inst.base_size())};  // the covered base, by convention
    cert.counts_in = {count_x3c(inst)};
    cert.targets_out = {out.target()};
    cert.counts_out = {count_subsets_enum(out.values(), out.target())};
  }
  return {std::move(out), std::move(cert)};
}

}  // namespace wvg
