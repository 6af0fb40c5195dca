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
#include <string>
#include <string_view>

#include "wstl/error.hpp"
#include "wstl/formula.hpp"

namespace wstl {

/// Byte range [start, end) of the input, plus the 1-based line/column of start.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  enum class Kind { unexpected_token, bad_weight, bad_interval, bad_predicate };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  const SourceSpan& span() const noexcept { return span_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string message_;
};

const char* to_string(ParseError::Kind kind) noexcept;

/// Parses one formula. Grammar, whitespace-insensitive, '#' starts a comment:
///
///   formula   := unary ( "&&" wopt unary )*  |  unary ( "||" wopt unary )*
///   wopt      := ( "[" number ( "," number )* "]" | wspec )?
///   unary     := "!" unary | ( "G" | "F" ) interval wspec? unary | atom
///   atom      := "TRUE" | "FALSE" | "(" formula ")"
///              | "bool" ( "{" number "}" )? "(" predicate ")" | predicate
///   predicate := affine ( ">=" | ">" | "<=" | "<" ) affine
///   affine    := [+-]? term ( [+-] term )*,   term := number ( "*" name )? | name
///   interval  := "[" int "," int "]"
///   wspec     := "{" ( "const" number | "disc" number | "vec" list
///                    | "gauss" list list number ) "}"
///
/// A chain of && (or ||) builds one n-ary node; at most one operator in the
/// chain may carry weights and their count must match the operand count.
/// Mixing && and || at one level requires parentheses.
Formula parse_formula(std::string_view text);

/// Canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Indented tree dump, one node per line.
std::string ast_dump(const Formula& f);

/// Shortest representation that reads back to the same double.
std::string format_number(double value);

}  // namespace wstl
