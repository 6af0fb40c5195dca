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

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wstl {

/// Discrete-time multi-component trace sampled at t = 0, 1, ..., length() - 1.
///
/// Samples are stored row-major: one row of `width()` values per time step.
/// All values are finite; construction rejects anything else.
class Signal {
 public:
  Signal() = default;

  /// `rows` holds one vector per time step, each with components.size() entries.
  Signal(std::vector<std::string> components, const std::vector<std::vector<double>>& rows);

  /// Row-major flat storage; data.size() must be a multiple of components.size().
  static Signal from_flat(std::vector<std::string> components, std::vector<double> data);

  std::size_t width() const noexcept { return components_.size(); }
  std::size_t length() const noexcept { return width() == 0 ? 0 : data_.size() / width(); }
  bool empty() const noexcept { return data_.empty(); }

  const std::vector<std::string>& components() const noexcept { return components_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::span<const double> sample(std::size_t t) const {
    return {data_.data() + t * width(), width()};
  }
  double at(std::size_t t, std::size_t component) const { return data_[t * width() + component]; }

  std::span<const double> flat() const noexcept { return data_; }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<std::string> components_;
  std::vector<double> data_;
};

/// Reads the CSV exchange format: a header row of component names, then one
/// row of numbers per time step. Throws CsvError on malformed input.
Signal signal_from_csv(std::istream& in);
Signal signal_from_csv(std::string_view text);

/// Writes the CSV exchange format with shortest round-trip number formatting.
std::string signal_to_csv(const Signal& signal);

}  // namespace wstl
