// Command-line front end: power indices, merge/split checks, subset-sum
// counting, comparison decisions, reduction pipelines, identity verification.
//
// Exit codes: 0 success, 2 usage/validation error, 3 resource-cap error.
// Decision subcommands with --exit-status return 0 for "yes", 1 for "no".
//
// All JSON indices are 0-based; rationals are "p/q" strings; integers are
// JSON numbers when they fit in 64 bits, decimal strings otherwise.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wvg/wvg.hpp"

namespace {

using wvg::io::json;

// ---- input plumbing ---------------------------------------------------------

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) wvg::fail(wvg::Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json load_json(const std::string& path) { return wvg::io::parse(read_text(path)); }

/// A game document is either a bare game object or an envelope produced by
/// `reduce` ({"game": ..., "coalition"/"player"/"m": ...}); both round-trip.
struct GameBundle {
  wvg::WeightedVotingGame game;
  std::optional<wvg::Coalition> coalition;
  std::optional<int> player;  // 1-based internally
  std::optional<int> m;
};

GameBundle load_game_bundle(const std::string& path) {
  json doc = load_json(path);
  const json& game_json = doc.contains("game") ? doc.at("game") : doc;
  GameBundle bundle{wvg::io::game_from_json(game_json), std::nullopt, std::nullopt,
                    std::nullopt};
  if (doc.contains("coalition") && !doc.at("coalition").is_null()) {
    bundle.coalition = wvg::io::coalition_from_json(doc.at("coalition"));
  }
  if (doc.contains("player") && doc.at("player").is_number_integer()) {
    bundle.player = doc.at("player").get<int>() + 1;
  }
  if (doc.contains("m") && doc.at("m").is_number_integer()) {
    bundle.m = doc.at("m").get<int>();
  }
  return bundle;
}

// ---- output plumbing ----------------------------------------------------------

enum class Format { json_mode, table_mode };

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string scalar_to_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

/// Human table output is a direct rendering of the JSON document — same
/// fields, same values, no separate computation.
void render_table(const json& doc, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      render_table(value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << indent << key << ":\n";
      for (const json& item : value) {
        std::cout << indent << "  -\n";
        render_table(item, indent + "    ");
      }
    } else if (value.is_array()) {
      std::cout << indent << key << ":";
      for (const json& item : value) std::cout << " " << scalar_to_text(item);
      std::cout << "\n";
    } else {
      std::cout << indent << key << ": " << scalar_to_text(value) << "\n";
    }
  }
}

void emit(const json& doc, Format format) {
  if (format == Format::json_mode) {
    emit_json(doc);
  } else {
    render_table(doc);
  }
}

// ---- shared options -----------------------------------------------------------

struct CommonOpts {
  Format format = Format::json_mode;
  bool exit_status = false;
  wvg::Limits limits;
};

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* text = std::getenv(name);
  if (!text || !*text) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0' || v == 0) {
    wvg::fail(wvg::Errc::parse_error,
              std::string(name) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag_callback(
      "--table", [&opts] { opts.format = Format::table_mode; },
      "Render output as a human-readable table instead of JSON");
  cmd->add_option("--max-cells", opts.limits.max_table_cells,
                  "Cap on counting-table cells (env WVG_MAX_DP_CELLS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-partitions", opts.limits.max_partitions,
                  "Cap on partitions a split search may evaluate (env WVG_MAX_PARTITIONS)")
      ->check(CLI::PositiveNumber);
}

void add_exit_status(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--exit-status", opts.exit_status,
                "Exit 0 for a yes decision, 1 for no");
}

int decision_exit(bool yes, const CommonOpts& opts) {
  if (!opts.exit_status) return 0;
  return yes ? 0 : 1;
}

wvg::BigInt parse_int_list_item(const std::string& text) {
  return wvg::parse_bigint(text);
}

std::vector<wvg::BigInt> parse_parts(const std::vector<std::string>& items) {
  std::vector<wvg::BigInt> parts;
  parts.reserve(items.size());
  for (const std::string& item : items) parts.push_back(parse_int_list_item(item));
  return parts;
}

// ---- subcommand payloads --------------------------------------------------------

int run_power(const std::string& game_path, const std::string& family_name,
              const CommonOpts& opts) {
  GameBundle bundle = load_game_bundle(game_path);
  wvg::IndexFamily family = wvg::parse_family(family_name);
  wvg::PowerReport report = wvg::full_report(bundle.game, family, opts.limits);
  emit(wvg::io::to_json(report), opts.format);
  return 0;
}

int run_merge_check(const std::string& game_path, const std::vector<int>& coalition_flag,
                    const std::string& family_name, const CommonOpts& opts) {
  GameBundle bundle = load_game_bundle(game_path);
  std::optional<wvg::Coalition> coalition = bundle.coalition;
  if (!coalition_flag.empty()) {
    std::vector<int> members;
    members.reserve(coalition_flag.size());
    for (int p : coalition_flag) members.push_back(p + 1);
    coalition = wvg::Coalition(std::move(members));
  }
  if (!coalition) {
    wvg::fail(wvg::Errc::parse_error,
              "no coalition: pass --coalition or a document with a \"coalition\" field");
  }
  wvg::IndexFamily family = wvg::parse_family(family_name);
  wvg::ManipulationVerdict verdict =
      wvg::is_beneficial_merge(bundle.game, wvg::MergeSpec{*coalition}, family, opts.limits);
  emit(wvg::io::to_json(verdict), opts.format);
  return decision_exit(verdict.beneficial, opts);
}

int run_split_check(const std::string& game_path, std::optional<int> player_flag,
                    std::optional<int> m_flag, const std::vector<std::string>& parts_flag,
                    const std::string& family_name, bool best, const CommonOpts& opts) {
  GameBundle bundle = load_game_bundle(game_path);
  wvg::IndexFamily family = wvg::parse_family(family_name);

  std::optional<int> player = bundle.player;
  if (player_flag) player = *player_flag + 1;
  if (!player) {
    wvg::fail(wvg::Errc::parse_error,
              "no player: pass --player or a document with a \"player\" field");
  }

  wvg::ManipulationVerdict verdict;
  if (!parts_flag.empty()) {
    wvg::SplitSpec spec{*player, parse_parts(parts_flag)};
    verdict = wvg::evaluate_split(bundle.game, spec, family, opts.limits);
  } else {
    std::optional<int> m = bundle.m;
    if (m_flag) m = *m_flag;
    if (!m) {
      wvg::fail(wvg::Errc::parse_error,
                "no part count: pass --m, --parts, or a document with an \"m\" field");
    }
    wvg::SearchMode mode =
        best ? wvg::SearchMode::best_margin : wvg::SearchMode::first_hit;
    verdict = wvg::search_beneficial_split(bundle.game, *player, *m, family, mode,
                                           opts.limits);
  }
  emit(wvg::io::to_json(verdict), opts.format);
  return decision_exit(verdict.beneficial, opts);
}

int run_count(const std::string& instance_path, const CommonOpts& opts) {
  wvg::SubsetSumInstance inst = wvg::io::subset_sum_from_json(load_json(instance_path));
  wvg::BigInt count = wvg::count_subset_sum(inst, opts.limits);
  emit(json{{"count", wvg::to_string(count)}}, opts.format);
  return 0;
}

int run_decide(const std::string& variant, const std::string& instance_path,
               const CommonOpts& opts) {
  json doc = load_json(instance_path);
  bool yes = false;
  if (variant == "compare") {
    yes = wvg::decide_compare(wvg::io::compare_from_json(doc), opts.limits);
  } else if (variant == "r") {
    yes = wvg::decide_compare_r(wvg::io::compare_r_from_json(doc), opts.limits);
  } else if (variant == "rr") {
    yes = wvg::decide_rr(wvg::io::rr_from_json(doc), opts.limits);
  } else {
    wvg::fail(wvg::Errc::parse_error, "unknown decide variant '" + variant + "'");
  }
  emit(json{{"variant", variant}, {"decision", yes}}, opts.format);
  return decision_exit(yes, opts);
}

// The reduce pipeline: each hop is one proof step, composed explicitly here.
// Normalization (scale by 8) is inserted automatically when the next step
// needs it, and recorded in the trace like any other stage.

struct ReduceState {
  json trace = json::array();
  bool tracing = false;
  bool verifying = false;

  void record(const std::string& stage, json output_instance, json certificate) {
    if (!tracing) return;
    json entry{{"stage", stage}, {"output", std::move(output_instance)}};
    if (!certificate.is_null()) entry["certificate"] = std::move(certificate);
    trace.push_back(std::move(entry));
  }
};

bool needs_times8(const wvg::CompareRInstance& inst) {
  for (const wvg::BigInt& v : inst.values()) {
    if (v % 8 != 0) return true;
  }
  return inst.q1() % 8 != 0 || inst.q2() % 8 != 0;
}

wvg::CompareRInstance stage_compare_to_r(const wvg::CompareInstance& inst,
                                         ReduceState& state) {
  auto [out, cert] = wvg::reduce_compare_to_r(inst, state.verifying);
  state.record("compare-to-r", wvg::io::to_json(out),
               state.verifying
                   ? wvg::io::certificate_to_json(cert, wvg::io::to_json(inst),
                                                  wvg::io::to_json(out))
                   : json());
  return out;
}

wvg::CompareRInstance stage_normalize(const wvg::CompareRInstance& inst,
                                      ReduceState& state) {
  if (!needs_times8(inst)) return inst;
  wvg::CompareRInstance out = wvg::normalize_times8(inst);
  state.record("normalize-times8", wvg::io::to_json(out), json());
  return out;
}

wvg::RRInstance stage_r_to_rr(const wvg::CompareRInstance& inst, bool flipped,
                              ReduceState& state) {
  wvg::CompareRInstance normalized = stage_normalize(inst, state);
  auto [out, cert] = wvg::reduce_r_to_rr(normalized, flipped, state.verifying);
  state.record(flipped ? "r-to-rr-flipped" : "r-to-rr", wvg::io::to_json(out),
               state.verifying
                   ? wvg::io::certificate_to_json(cert, wvg::io::to_json(normalized),
                                                  wvg::io::to_json(out))
                   : json());
  return out;
}

json finish_reduce(json result, ReduceState& state) {
  if (state.tracing) {
    return json{{"trace", std::move(state.trace)}, {"result", std::move(result)}};
  }
  return result;
}

int run_reduce(const std::string& from, const std::string& to,
               const std::string& instance_path, bool trace, bool verify,
               const CommonOpts& opts) {
  ReduceState state;
  state.tracing = trace;
  state.verifying = verify;
  json doc = load_json(instance_path);

  auto unsupported = [&]() -> json {
    wvg::fail(wvg::Errc::parse_error,
              "no reduction path from '" + from + "' to '" + to + "'");
  };

  json result;
  if (from == "x3c") {
    wvg::X3CInstance inst = wvg::io::x3c_from_json(doc);
    if (to != "subsetsum") return unsupported(), 2;
    auto [out, cert] = wvg::reduce_x3c_to_subsetsum(inst, verify);
    state.record("x3c-to-subsetsum", wvg::io::to_json(out),
                 verify ? wvg::io::certificate_to_json(cert, wvg::io::to_json(inst),
                                                       wvg::io::to_json(out))
                        : json());
    result = wvg::io::to_json(out);
  } else if (from == "compare" || from == "r") {
    std::optional<wvg::CompareRInstance> r;
    if (from == "compare") {
      wvg::CompareInstance inst = wvg::io::compare_from_json(doc);
      r = stage_compare_to_r(inst, state);
    } else {
      r = wvg::io::compare_r_from_json(doc);
    }
    if (to == "r") {
      result = wvg::io::to_json(*r);
    } else {
      bool flipped = (to == "banzhaf-split");
      wvg::RRInstance rr = stage_r_to_rr(*r, flipped, state);
      if (to == "rr") {
        result = wvg::io::to_json(rr);
      } else if (to == "banzhaf-merge") {
        auto [game, spec] = wvg::rr_to_banzhaf_merge(rr);
        result = wvg::io::merge_gadget_to_json(game, spec);
      } else if (to == "shapley-merge") {
        auto [game, spec] = wvg::rr_to_shapley_merge(rr);
        result = wvg::io::merge_gadget_to_json(game, spec);
      } else if (to == "banzhaf-split") {
        result = wvg::io::split_gadget_to_json(wvg::rr_to_banzhaf_split(rr));
      } else {
        return unsupported(), 2;
      }
    }
  } else if (from == "rr" || from == "rr-flipped") {
    wvg::RRInstance inst = wvg::io::rr_from_json(doc);
    bool want_flipped = (from == "rr-flipped");
    if (inst.flipped() != want_flipped) {
      wvg::fail(wvg::Errc::wrong_variant,
                std::string("instance flag says flipped=") +
                    (inst.flipped() ? "true" : "false") + " but --from says " + from);
    }
    if (to == "banzhaf-merge") {
      auto [game, spec] = wvg::rr_to_banzhaf_merge(inst);
      result = wvg::io::merge_gadget_to_json(game, spec);
    } else if (to == "shapley-merge") {
      auto [game, spec] = wvg::rr_to_shapley_merge(inst);
      result = wvg::io::merge_gadget_to_json(game, spec);
    } else if (to == "banzhaf-split") {
      result = wvg::io::split_gadget_to_json(wvg::rr_to_banzhaf_split(inst));
    } else {
      return unsupported(), 2;
    }
  } else {
    return unsupported(), 2;
  }

  emit(finish_reduce(std::move(result), state), opts.format);
  return 0;
}

int run_verify(const std::string& identity, const std::string& instance_path,
               int random_count, std::uint64_t seed, const CommonOpts& opts) {
  if (instance_path.empty() && random_count <= 0) {
    wvg::fail(wvg::Errc::parse_error, "pass --instance or --random N");
  }

  json failures = json::array();
  int total = 0;
  wvg::Rng rng(seed);

  auto check_rr_identity = [&](const wvg::RRInstance& inst, bool shapley) {
    ++total;
    auto [direct, formula] = shapley
                                 ? wvg::verify_shapley_merge_identity(inst, opts.limits)
                                 : wvg::verify_banzhaf_merge_identity(inst, opts.limits);
    if (direct != formula) {
      failures.push_back(json{{"instance", wvg::io::to_json(inst)},
                              {"direct", wvg::to_string(direct)},
                              {"formula", wvg::to_string(formula)}});
    }
  };

  auto check_additivity = [&](const wvg::WeightedVotingGame& game,
                              const wvg::Coalition& pair) {
    ++total;
    wvg::ManipulationVerdict verdict = wvg::is_beneficial_merge(
        game, wvg::MergeSpec{pair}, wvg::IndexFamily::probabilistic_banzhaf,
        opts.limits);
    if (verdict.margin != 0) {
      failures.push_back(json{{"game", wvg::io::to_json(game)},
                              {"coalition", wvg::io::coalition_to_json(pair)},
                              {"margin", wvg::to_string(verdict.margin)}});
    }
  };

  if (identity == "banzhaf-merge" || identity == "shapley-merge") {
    bool shapley = identity == "shapley-merge";
    if (!instance_path.empty()) {
      check_rr_identity(wvg::io::rr_from_json(load_json(instance_path)), shapley);
    }
    for (int i = 0; i < random_count; ++i) {
      check_rr_identity(wvg::random_rr(rng, 8, 12, false), shapley);
    }
  } else if (identity == "merge-additivity") {
    if (!instance_path.empty()) {
      GameBundle bundle = load_game_bundle(instance_path);
      if (!bundle.coalition || bundle.coalition->size() != 2) {
        wvg::fail(wvg::Errc::parse_error,
                  "merge-additivity needs a document with a 2-player \"coalition\"");
      }
      check_additivity(bundle.game, *bundle.coalition);
    }
    for (int i = 0; i < random_count; ++i) {
      wvg::WeightedVotingGame game = wvg::random_game(rng, 8, 12);
      while (game.player_count() < 2) game = wvg::random_game(rng, 8, 12);
      int a = rng.range(1, game.player_count());
      int b = rng.range(1, game.player_count() - 1);
      if (b >= a) ++b;
      check_additivity(game, wvg::Coalition({a, b}));
    }
  } else {
    wvg::fail(wvg::Errc::parse_error, "unknown identity '" + identity + "'");
  }

  json doc{{"identity", identity},
           {"total", total},
           {"passed", total - static_cast<int>(failures.size())},
           {"failures", std::move(failures)}};
  emit(doc, opts.format);
  return doc.at("failures").empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on weighted voting games: power indices, "
               "merge/split manipulation checks, and count-preserving reductions"};
  app.require_subcommand(1);

  CommonOpts opts;
  try {
    opts.limits.max_table_cells = env_cap("WVG_MAX_DP_CELLS", opts.limits.max_table_cells);
    opts.limits.max_partitions = env_cap("WVG_MAX_PARTITIONS", opts.limits.max_partitions);
  } catch (const wvg::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  // power
  auto* power = app.add_subcommand("power", "Per-player power index report");
  std::string power_game, power_family;
  power->add_option("--game", power_game, "Game JSON (path or '-')")->required();
  power->add_option("--family", power_family,
                    "raw-banzhaf | banzhaf | normalized-banzhaf | shapley")
      ->required();
  add_common(power, opts);

  // merge-check
  auto* merge_check = app.add_subcommand("merge-check", "Is this merge beneficial?");
  std::string mc_game, mc_family = "banzhaf";
  std::vector<int> mc_coalition;
  merge_check->add_option("--game", mc_game, "Game or merge-gadget JSON (path or '-')")
      ->required();
  merge_check->add_option("--coalition", mc_coalition,
                          "0-based players to merge (comma separated)")
      ->delimiter(',');
  merge_check->add_option("--family", mc_family, "Index family");
  add_common(merge_check, opts);
  add_exit_status(merge_check, opts);

  // split-check
  auto* split_check = app.add_subcommand(
      "split-check", "Evaluate one split or search all splits of a player");
  std::string sc_game, sc_family = "banzhaf";
  std::optional<int> sc_player, sc_m;
  std::vector<std::string> sc_parts;
  bool sc_best = false;
  split_check->add_option("--game", sc_game, "Game or split-gadget JSON (path or '-')")
      ->required();
  split_check->add_option("--player", sc_player, "0-based player to split");
  split_check->add_option("--m", sc_m, "Number of identities to split into");
  split_check->add_option("--parts", sc_parts,
                          "Fixed part weights (comma separated); evaluates instead of searching")
      ->delimiter(',');
  split_check->add_option("--family", sc_family, "Index family");
  split_check->add_flag("--best", sc_best,
                        "Scan the whole partition space for the best margin");
  add_common(split_check, opts);
  add_exit_status(split_check, opts);

  // count
  auto* count = app.add_subcommand("count", "Count subsets hitting the target");
  std::string count_instance;
  count->add_option("--instance", count_instance, "Subset-sum JSON (path or '-')")
      ->required();
  add_common(count, opts);

  // decide
  auto* decide = app.add_subcommand("decide", "Decide a count comparison");
  std::string decide_variant, decide_instance;
  decide->add_option("--variant", decide_variant, "compare | r | rr")->required();
  decide->add_option("--instance", decide_instance, "Instance JSON (path or '-')")
      ->required();
  add_common(decide, opts);
  add_exit_status(decide, opts);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Run a reduction pipeline");
  std::string reduce_from, reduce_to, reduce_instance;
  bool reduce_trace = false, reduce_verify = false;
  reduce->add_option("--from", reduce_from, "compare | r | rr | rr-flipped | x3c")
      ->required();
  reduce->add_option("--to", reduce_to,
                     "r | rr | banzhaf-merge | banzhaf-split | shapley-merge | subsetsum")
      ->required();
  reduce->add_option("--instance", reduce_instance, "Instance JSON (path or '-')")
      ->required();
  reduce->add_flag("--trace", reduce_trace, "Include every stage in the output");
  reduce->add_flag("--verify", reduce_verify,
                   "Attach count-preservation certificates (enumeration-checked)");
  add_common(reduce, opts);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a closed-form identity");
  std::string verify_identity, verify_instance;
  int verify_random = 0;
  std::uint64_t verify_seed = 0;
  verify->add_option("--identity", verify_identity,
                     "banzhaf-merge | shapley-merge | merge-additivity")
      ->required();
  verify->add_option("--instance", verify_instance, "Instance JSON (path or '-')");
  verify->add_option("--random", verify_random, "Also check N random instances");
  verify->add_option("--seed", verify_seed, "Seed for the random batch");
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (power->parsed()) return run_power(power_game, power_family, opts);
    if (merge_check->parsed()) {
      return run_merge_check(mc_game, mc_coalition, mc_family, opts);
    }
    if (split_check->parsed()) {
      return run_split_check(sc_game, sc_player, sc_m, sc_parts, sc_family, sc_best,
                             opts);
    }
    if (count->parsed()) return run_count(count_instance, opts);
    if (decide->parsed()) return run_decide(decide_variant, decide_instance, opts);
    if (reduce->parsed()) {
      return run_reduce(reduce_from, reduce_to, reduce_instance, reduce_trace,
                        reduce_verify, opts);
    }
    if (verify->parsed()) {
      return run_verify(verify_identity, verify_instance, verify_random, verify_seed,
                        opts);
    }
  } catch (const wvg::Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_resource_error() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
