// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMG_ERROR_HPP
#define BMG_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmg {

// The string forms are stable: they appear in wire responses and CLI output.
enum class ErrorCode {
  malformed_name,
  non_positive_radius,
  dimension_mismatch,
  density_search_diverged,
  precision_unreached,
  not_nested,
  outside_region,
  wrong_turn,
  session_finished,
  invalid_move,
  invalid_external_move,
  avoidance_search_exhausted,
  unknown_preset,
  invalid_config,
  unknown_session,
  parse_error,
  io_error,
  strategy_violation,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_name: return "MalformedName";
    case ErrorCode::non_positive_radius: return "NonPositiveRadius";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::density_search_diverged: return "DensitySearchDiverged";
    case ErrorCode::precision_unreached: return "PrecisionUnreached";
    case ErrorCode::not_nested: return "NotNested";
    case ErrorCode::outside_region: return "OutsideRegion";
    case ErrorCode::wrong_turn: return "WrongTurn";
    case ErrorCode::session_finished: return "SessionFinished";
    case ErrorCode::invalid_move: return "InvalidMove";
    case ErrorCode::invalid_external_move: return "InvalidExternalMove";
    case ErrorCode::avoidance_search_exhausted: return "AvoidanceSearchExhausted";
    case ErrorCode::unknown_preset: return "UnknownPreset";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::unknown_session: return "UnknownSession";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::strategy_violation: return "StrategyViolation";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception. `round`
/// is set for errors raised during play; `cause` carries the underlying
/// validation code of an InvalidExternalMove.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> round = std::nullopt,
        std::optional<ErrorCode> cause = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        round_(round),
        cause_(cause) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> round() const noexcept { return round_; }
  std::optional<ErrorCode> cause() const noexcept { return cause_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> round_;
  std::optional<ErrorCode> cause_;
};

}  // namespace bmg

#endif  // BMG_ERROR_HPP
