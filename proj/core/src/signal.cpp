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

#include "wstl/signal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "numfmt.hpp"
#include "wstl/error.hpp"

namespace wstl {
namespace {

void check_components(const std::vector<std::string>& components) {
  if (components.empty()) throw Error(Errc::invalid_argument, "signal needs at least one component");
  std::set<std::string_view> seen;
  for (const auto& name : components) {
    if (name.empty()) throw Error(Errc::invalid_argument, "empty component name");
    if (!seen.insert(name).second) {
      throw Error(Errc::invalid_argument, "duplicate component name '" + name + "'");
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Signal::Signal(std::vector<std::string> components, const std::vector<std::vector<double>>& rows)
    : components_(std::move(components)) {
  check_components(components_);
  data_.reserve(rows.size() * components_.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != components_.size()) {
      throw Error(Errc::ragged_rows, "sample " + std::to_string(t) + " has " +
                                         std::to_string(rows[t].size()) + " values, expected " +
                                         std::to_string(components_.size()));
    }
    for (double v : rows[t]) {
      if (!std::isfinite(v)) {
        throw Error(Errc::invalid_argument, "non-finite value at sample " + std::to_string(t));
      }
      data_.push_back(v);
    }
  }
}

Signal Signal::from_flat(std::vector<std::string> components, std::vector<double> data) {
  check_components(components);
  if (data.size() % components.size() != 0) {
    throw Error(Errc::ragged_rows, "flat data length is not a multiple of the component count");
  }
  if (!std::all_of(data.begin(), data.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(Errc::invalid_argument, "non-finite signal value");
  }
  Signal s;
  s.components_ = std::move(components);
  s.data_ = std::move(data);
  return s;
}

std::optional<std::size_t> Signal::index_of(std::string_view name) const {
  auto it = std::find(components_.begin(), components_.end(), name);
  if (it == components_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - components_.begin());
}

Signal signal_from_csv(std::istream& in) {
  std::string line;
  std::size_t row = 0;
  std::vector<std::string> header;
  std::vector<double> data;

  while (std::getline(in, line)) {
    ++row;
    std::string_view view = line;
    if (row == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) {
      if (row == 1) throw CsvError(Errc::empty_signal, 1, 1, "missing header row");
      continue;
    }
    auto cells = split_row(view);
    if (header.empty()) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].empty()) throw CsvError(Errc::csv_parse, row, c + 1, "empty component name");
        header.emplace_back(cells[c]);
      }
      try {
        check_components(header);
      } catch (const Error& e) {
        throw CsvError(Errc::csv_parse, row, 1, e.what());
      }
      continue;
    }
    if (cells.size() != header.size()) {
      throw CsvError(Errc::ragged_rows, row, std::min(cells.size(), header.size()) + 1,
                     "row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                         " cells, header has " + std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto value = detail::parse_double(cells[c]);
      if (!value || !std::isfinite(*value)) {
        throw CsvError(Errc::csv_parse, row, c + 1,
                       "row " + std::to_string(row) + ", column " + std::to_string(c + 1) +
                           ": expected a finite number, got '" + std::string(cells[c]) + "'");
      }
      data.push_back(*value);
    }
  }
  if (header.empty()) throw CsvError(Errc::empty_signal, 1, 1, "missing header row");
  if (data.empty()) throw CsvError(Errc::empty_signal, row + 1, 1, "signal has no samples");
  return Signal::from_flat(std::move(header), std::move(data));
}

Signal signal_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return signal_from_csv(in);
}

std::string signal_to_csv(const Signal& signal) {
  std::string out;
  for (std::size_t c = 0; c < signal.width(); ++c) {
    if (c) out += ',';
    out += signal.components()[c];
  }
  out += '\n';
  for (std::size_t t = 0; t < signal.length(); ++t) {
    for (std::size_t c = 0; c < signal.width(); ++c) {
      if (c) out += ',';
      out += detail::shortest(signal.at(t, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace wstl
