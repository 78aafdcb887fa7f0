#pragma once

#include <stdexcept>
#include <string>

namespace wvg {

/// Failure categories raised by the library. Validation failures mean the
/// input violates a documented precondition; resource failures mean the
/// computation would exceed a configured cap and was refused up front.
enum class Errc {
  empty_player_list,
  negative_weight,
  quota_out_of_range,
  index_out_of_range,
  empty_coalition,
  weight_mismatch,
  bad_part_count,
  invalid_instance,
  not_divisible_by_8,
  odd_total,
  wrong_variant,
  too_large,
  resource_limit,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_player_list: return "EmptyPlayerList";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::quota_out_of_range: return "QuotaOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::empty_coalition: return "EmptyCoalition";
    case Errc::weight_mismatch: return "WeightMismatch";
    case Errc::bad_part_count: return "BadPartCount";
    case Errc::invalid_instance: return "InvalidInstance";
    case Errc::not_divisible_by_8: return "NotDivisibleBy8";
    case Errc::odd_total: return "OddTotal";
    case Errc::wrong_variant: return "WrongVariant";
    case Errc::too_large: return "TooLarge";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures caused by a configured resource cap rather than by
  /// invalid input (the CLI maps these to a distinct exit status).
  bool is_resource_error() const noexcept {
    return code_ == Errc::too_large || code_ == Errc::resource_limit;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace wvg
