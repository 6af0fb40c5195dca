// Copyright 2026 The wstl Authors
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

#include <string>

#include "wstl/error.hpp"
#include "wstl/time.hpp"

namespace wstl {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::invalid_interval: return "InvalidInterval";
    case Errc::csv_parse: return "ParseError";
    case Errc::ragged_rows: return "RaggedRows";
    case Errc::empty_signal: return "EmptySignal";
    case Errc::degenerate_box: return "DegenerateBox";
    case Errc::horizon_exceeds_signal: return "HorizonExceedsSignal";
    case Errc::non_smooth_engine: return "NonSmoothEngine";
    case Errc::input_out_of_bounds: return "InputOutOfBounds";
    case Errc::numeric_overflow: return "NumericOverflow";
    case Errc::parse: return "ParseError";
    case Errc::config: return "ConfigError";
    case Errc::io: return "IoError";
  }
  return "Error";
}

TimeInterval::TimeInterval(TimeStep lo, TimeStep hi) : lo_(lo), hi_(hi) {
  if (lo < 0 || hi < lo) {
    throw Error(Errc::invalid_interval, "invalid interval [" + std::to_string(lo) + "," +
                                            std::to_string(hi) + "]: need 0 <= a <= b");
  }
}

}  // namespace wstl
