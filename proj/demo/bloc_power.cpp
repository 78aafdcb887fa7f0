// A small tour of the library: build a toy council, report every power
// index, then probe a merge and a split for strict power gains.

#include <iostream>

#include "wvg/wvg.hpp"

using namespace wvg;

static void print_report(const WeightedVotingGame& game, IndexFamily family) {
  PowerReport report = full_report(game, family);
  std::cout << family_name(family) << ":";
  for (const Rational& v : report.values) std::cout << " " << to_string(v);
  std::cout << "\n";
}

int main() {
  // Four parties with seat counts (4, 3, 2, 1) passing motions by majority.
  WeightedVotingGame council({4, 3, 2, 1}, 6);
  std::cout << "council (4,3,2,1; 6)\n";
  print_report(council, IndexFamily::probabilistic_banzhaf);
  print_report(council, IndexFamily::normalized_banzhaf);
  print_report(council, IndexFamily::shapley_shubik);

  // Would the two smallest parties gain by fusing into one?
  ManipulationVerdict fuse = is_beneficial_merge(
      council, MergeSpec{Coalition({3, 4})}, IndexFamily::probabilistic_banzhaf);
  std::cout << "\nparties 3+4 fuse: margin " << to_string(fuse.margin)
            << (fuse.beneficial ? " (beneficial)\n" : " (not beneficial)\n");

  // Could party 1 gain by running as up to three fake identities?
  ManipulationVerdict split_verdict = search_beneficial_split(
      council, 1, 3, IndexFamily::shapley_shubik, SearchMode::best_margin);
  std::cout << "party 1 splits in 3: best margin " << to_string(split_verdict.margin);
  if (split_verdict.witness) {
    std::cout << " with parts";
    for (const BigInt& p : split_verdict.witness->parts)
      std::cout << " " << to_string(p);
  }
  std::cout << (split_verdict.beneficial ? " (beneficial)\n" : " (not beneficial)\n");
  return 0;
}
