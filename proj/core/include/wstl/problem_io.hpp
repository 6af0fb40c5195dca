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

#include <filesystem>
#include <string>
#include <string_view>

#include "wstl/synthesis.hpp"

namespace wstl {

struct ProblemConfig {
  SynthesisProblem problem;
  SynthesisOptions options;
};

/// Reads a synthesis problem from JSON:
///
///   { "system": { "type": "unicycle" | "single_integrator", "params": {...} },
///     "q0": [...], "T": 20, "formula": "<formula text or file path>",
///     "lambda": 0.05, "engine": "smooth", "beta": 10, "epsilon": 0,
///     "optimizer": { "restarts": 8, "max_iters": 500, "seed": 0,
///                    "center_start": true } }
///
/// params: "input_lo", "input_hi" (both systems), "states" (single
/// integrator names). A formula string naming an existing file, relative to
/// `base_dir`, is read from that file. Throws Error(config).
ProblemConfig problem_from_json(std::string_view json_text,
                                const std::filesystem::path& base_dir = {});
ProblemConfig load_problem(const std::filesystem::path& path);

/// Header t, states..., inputs...; the last row leaves the input cells empty.
std::string trajectory_csv(const SynthesisProblem& problem, const SynthesisResult& result);

/// objective, robustness_smooth, robustness_exact, satisfied, iterations,
/// wall_time_ms and a few descriptive fields.
std::string summary_json(const SynthesisResult& result);

}  // namespace wstl
