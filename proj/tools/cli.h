// Copyright 2026 The GTR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtr/density.h"

namespace gtr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;

struct ExperimentConfig {
    std::string command;
    std::string state;
    std::string density = "uniform";
    std::uint64_t samples = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::size_t cells = 0;
    std::optional<std::size_t> position;
    std::size_t n_max = 0;
    std::size_t max_cells = 24;
    bool abstract = false;
    bool recurrence = false;
    std::string target = "ramp";
    std::vector<std::size_t> m;
    std::vector<std::size_t> ell;
    std::vector<double> x1{0.5};
    std::string delta;
    std::string geometry = "simplex";
    std::vector<double> epsilons;
    std::size_t outcome = 1;  // 1-based
    bool monte_carlo = false;
    std::string points;
    unsigned threads = 1;
    std::string out;
    std::string format = "csv";
};

/// Parses "a,b,c" into a barycentric state.
BarycentricState parse_state(const std::string &text);
/// Parses "a,b,c;d,e,f" into a list of states.
std::vector<BarycentricState> parse_points(const std::string &text);
/// Parses a density spec: either a compact string (uniform,
/// cellular1d:bbu, grid:<res>:<mask|all>, truncated:<geometry>:<eps>,
/// dirac:<points>) or a JSON object with a "kind" tag.
Density parse_density(const std::string &text, std::size_t n_outcomes);

/// Parses arguments (without the program name) into a config. A
/// `--config <file>` of key = value lines supplies defaults that explicit
/// flags override. Throws CLI::ParseError or DomainError.
ExperimentConfig parse_arguments(const std::vector<std::string> &args);

/// Executes a config. Results go to config.out when set (summary to `out`),
/// otherwise results go to `out` and the summary to `err`.
void execute(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Full front end; returns the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gtr::cli
