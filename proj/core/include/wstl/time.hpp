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

#pragma once

#include <cstdint>

namespace wstl {

using TimeStep = std::int64_t;

/// Closed discrete interval [lo, hi] with 0 <= lo <= hi.
class TimeInterval {
 public:
  /// Throws Error(invalid_interval) unless 0 <= lo <= hi.
  TimeInterval(TimeStep lo, TimeStep hi);

  TimeStep lo() const noexcept { return lo_; }
  TimeStep hi() const noexcept { return hi_; }

  /// Number of points, hi - lo + 1.
  TimeStep size() const noexcept { return hi_ - lo_ + 1; }

  bool contains(TimeStep t) const noexcept { return lo_ <= t && t <= hi_; }

  /// The interval t + I = [t + lo, t + hi].
  TimeInterval shifted(TimeStep t) const { return {lo_ + t, hi_ + t}; }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

 private:
  TimeStep lo_;
  TimeStep hi_;
};

}  // namespace wstl
