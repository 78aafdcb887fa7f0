// Walk a comparison instance down the whole reduction chain — fold the two
// sides into one sequence, scale by 8, pin the targets, build the merge
// gadget — and confirm at the end that the gadget's exact merge margin says
// the same thing the original count comparison did.

#include <iostream>

#include "wvg/wvg.hpp"

using namespace wvg;

static void show(const char* label, const std::vector<BigInt>& values) {
  std::cout << label << " (";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << to_string(values[i]);
  }
  std::cout << ")\n";
}

int main() {
  // Does (1,1) hit target 1 in strictly more ways than (1,2) hits 3?
  CompareInstance input(SubsetSumInstance({1, 1}, 1), SubsetSumInstance({1, 2}, 3));
  bool expected = decide_compare(input);
  std::cout << "counts: left " << to_string(count_subset_sum(input.left()))
            << ", right " << to_string(count_subset_sum(input.right()))
            << " -> decision " << (expected ? "yes" : "no") << "\n\n";

  auto [r, r_cert] = reduce_compare_to_r(input, /*verify=*/true);
  show("one-sequence form:", r.values());
  std::cout << "  q1 " << to_string(r.q1()) << ", q2 " << to_string(r.q2())
            << ", counts preserved: " << (r_cert.counts_preserved() ? "yes" : "no")
            << "\n";

  CompareRInstance scaled = normalize_times8(r);
  auto [rr, rr_cert] = reduce_r_to_rr(scaled, /*flipped=*/false, /*verify=*/true);
  show("pinned-target form:", rr.values());
  std::cout << "  targets " << to_string(rr.target_low()) << " vs "
            << to_string(rr.target_high())
            << ", counts preserved: " << (rr_cert.counts_preserved() ? "yes" : "no")
            << "\n\n";

  auto [game, spec] = rr_to_banzhaf_merge(rr);
  show("gadget game weights:", game.weights());
  ManipulationVerdict verdict =
      is_beneficial_merge(game, spec, IndexFamily::probabilistic_banzhaf);
  std::cout << "merge margin " << to_string(verdict.margin) << " -> "
            << (verdict.beneficial ? "beneficial" : "not beneficial")
            << " (expected " << (expected ? "beneficial" : "not beneficial") << ")\n";

  return verdict.beneficial == expected ? 0 : 1;
}
