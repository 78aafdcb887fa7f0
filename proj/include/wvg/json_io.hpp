#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/indices.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/numeric.hpp"
#include "wvg/reductions.hpp"

// JSON conventions, applied uniformly:
//   - all player and set-element indices are 0-based externally (the library
//     itself is 1-based, matching the usual mathematical notation);
//   - integers are emitted as JSON numbers when they fit in 64 bits and as
//     decimal strings otherwise; both forms are accepted on input;
//   - rationals are always "p/q" strings (or "p" when the denominator is 1),
//     reduced, never floats.
namespace wvg::io {

using json = nlohmann::ordered_json;

inline json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return to_string(v);
}

inline BigInt bigint_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  fail(Errc::parse_error, std::string(what) + " must be an integer or decimal string");
}

inline json bigints_to_json(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const BigInt& v : values) arr.push_back(bigint_to_json(v));
  return arr;
}

inline std::vector<BigInt> bigints_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<BigInt> values;
  values.reserve(j.size());
  for (const json& item : j) values.push_back(bigint_from_json(item, what));
  return values;
}

inline const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::parse_error, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

// ---- games -----------------------------------------------------------------

inline json to_json(const WeightedVotingGame& game) {
  return json{{"weights", bigints_to_json(game.weights())},
              {"quota", bigint_to_json(game.quota())}};
}

inline WeightedVotingGame game_from_json(const json& j) {
  std::vector<BigInt> weights = bigints_from_json(require_field(j, "weights"), "weights");
  BigInt quota = bigint_from_json(require_field(j, "quota"), "quota");
  return WeightedVotingGame(std::move(weights), std::move(quota));
}

/// 0-based on the wire, 1-based in the library.
inline json coalition_to_json(const Coalition& c) {
  json arr = json::array();
  for (int p : c.members()) arr.push_back(p - 1);
  return arr;
}

inline Coalition coalition_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "coalition must be an array of 0-based players");
  std::vector<int> members;
  members.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_number_integer()) {
      fail(Errc::parse_error, "coalition members must be integers");
    }
    members.push_back(item.get<int>() + 1);
  }
  return Coalition(std::move(members));
}

// ---- reports and verdicts ---------------------------------------------------

inline json to_json(const PowerReport& report) {
  json values = json::array();
  for (const Rational& v : report.values) values.push_back(to_string(v));
  json raw = json::array();
  for (const BigInt& r : report.raw) raw.push_back(to_string(r));
  return json{{"family", family_name(report.family)},
              {"values", std::move(values)},
              {"raw", std::move(raw)}};
}

inline json to_json(const ManipulationVerdict& verdict) {
  json witness;
  if (verdict.witness) {
    witness = bigints_to_json(verdict.witness->parts);
  }
  return json{{"beneficial", verdict.beneficial},
              {"margin", to_string(verdict.margin)},
              {"witness", std::move(witness)},
              {"before", to_string(verdict.before)},
              {"after", to_string(verdict.after)}};
}

// ---- reduction-chain instances ----------------------------------------------

inline json to_json(const SubsetSumInstance& inst) {
  return json{{"values", bigints_to_json(inst.values())},
              {"target", bigint_to_json(inst.target())}};
}

inline SubsetSumInstance subset_sum_from_json(const json& j) {
  return SubsetSumInstance(bigints_from_json(require_field(j, "values"), "values"),
                           bigint_from_json(require_field(j, "target"), "target"));
}

inline json to_json(const CompareInstance& inst) {
  return json{{"left", to_json(inst.left())}, {"right", to_json(inst.right())}};
}

inline CompareInstance compare_from_json(const json& j) {
  return CompareInstance(subset_sum_from_json(require_field(j, "left")),
                         subset_sum_from_json(require_field(j, "right")));
}

inline json to_json(const CompareRInstance& inst) {
  return json{{"values", bigints_to_json(inst.values())},
              {"q1", bigint_to_json(inst.q1())},
              {"q2", bigint_to_json(inst.q2())}};
}

inline CompareRInstance compare_r_from_json(const json& j) {
  return CompareRInstance(bigints_from_json(require_field(j, "values"), "values"),
                          bigint_from_json(require_field(j, "q1"), "q1"),
                          bigint_from_json(require_field(j, "q2"), "q2"));
}

inline json to_json(const RRInstance& inst) {
  return json{{"values", bigints_to_json(inst.values())},
              {"flipped", inst.flipped()}};
}

inline RRInstance rr_from_json(const json& j) {
  const json& flipped = require_field(j, "flipped");
  if (!flipped.is_boolean()) fail(Errc::parse_error, "\"flipped\" must be a boolean");
  return RRInstance(bigints_from_json(require_field(j, "values"), "values"),
                    flipped.get<bool>());
}

/// Base elements are 0-based on the wire (like every other index).
inline json to_json(const X3CInstance& inst) {
  json family = json::array();
  for (const auto& set : inst.family()) {
    family.push_back(json::array({set[0] - 1, set[1] - 1, set[2] - 1}));
  }
  return json{{"base_size", inst.base_size()}, {"family", std::move(family)}};
}

inline X3CInstance x3c_from_json(const json& j) {
  const json& base = require_field(j, "base_size");
  if (!base.is_number_integer()) fail(Errc::parse_error, "\"base_size\" must be an integer");
  const json& family_json = require_field(j, "family");
  if (!family_json.is_array()) fail(Errc::parse_error, "\"family\" must be an array");
  std::vector<std::array<int, 3>> family;
  family.reserve(family_json.size());
  for (const json& set_json : family_json) {
    if (!set_json.is_array() || set_json.size() != 3) {
      fail(Errc::parse_error, "each family set must be an array of 3 elements");
    }
    std::array<int, 3> set{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!set_json[i].is_number_integer()) {
        fail(Errc::parse_error, "family set elements must be integers");
      }
      set[i] = set_json[i].get<int>() + 1;
    }
    family.push_back(set);
  }
  return X3CInstance(base.get<int>(), std::move(family));
}

// ---- certificates and gadget envelopes ---------------------------------------

/// Certificate envelope: both instances plus the matched counts, all counts
/// as decimal strings.
inline json certificate_to_json(const ReductionCertificate& cert, json input_instance,
                                json output_instance) {
  auto strings = [](const std::vector<BigInt>& values) {
    json arr = json::array();
    for (const BigInt& v : values) arr.push_back(to_string(v));
    return arr;
  };
  return json{{"input", std::move(input_instance)},
              {"output", std::move(output_instance)},
              {"verified", cert.verified},
              {"input_targets", strings(cert.targets_in)},
              {"input_counts", strings(cert.counts_in)},
              {"output_targets", strings(cert.targets_out)},
              {"output_counts", strings(cert.counts_out)}};
}

inline json merge_gadget_to_json(const WeightedVotingGame& game, const MergeSpec& spec) {
  return json{{"game", to_json(game)}, {"coalition", coalition_to_json(spec.coalition)}};
}

inline json split_gadget_to_json(const SplitGadget& gadget) {
  return json{{"game", to_json(gadget.game)},
              {"player", gadget.player - 1},
              {"m", gadget.m}};
}

inline json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "input is not valid JSON");
  return j;
}

}  // namespace wvg::io
