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
#include <stdexcept>
#include <string>

namespace wstl {

enum class Errc {
  invalid_argument,
  non_positive_weight,
  length_mismatch,
  invalid_interval,
  csv_parse,
  ragged_rows,
  empty_signal,
  degenerate_box,
  horizon_exceeds_signal,
  non_smooth_engine,
  input_out_of_bounds,
  numeric_overflow,
  parse,
  config,
  io,
};

const char* to_string(Errc code) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed signal CSV. Row and column are 1-based; row 1 is the header.
class CsvError : public Error {
 public:
  CsvError(Errc code, std::size_t row, std::size_t column, const std::string& what)
      : Error(code, what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace wstl
