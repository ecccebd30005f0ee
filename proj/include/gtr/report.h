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

#include <string>
#include <vector>

#include "json.hpp"

#include "gtr/cellular_approximation.h"
#include "gtr/montecarlo.h"
#include "gtr/robustness.h"
#include "gtr/universal.h"

namespace gtr {

inline constexpr const char *kSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

/// Rows of one result table. Each row is a JSON object whose keys are
/// exactly `columns`, in order.
struct ResultTable {
    std::vector<std::string> columns;
    Json rows = Json::array();

    void add(Json row);
};

/// "%.17g".
std::string format_double(double v);

/// Header line plus one line per row. Floats use format_double, rationals
/// are already strings of the form "p/q".
std::string to_csv(const ResultTable &table);

/// {"schema_version", "command", "parameters", "summary", "columns", "rows"}.
Json make_document(const std::string &command, Json parameters, Json summary, const ResultTable &table);

// Tables. Outcome indices in tables are 1-based.
ResultTable estimate_table(const TransitionEstimate &e);
Json universal_row(std::size_t n, std::size_t i, const ExactProbability &average);
Json identity_row(const std::string &name, const IdentityCheck &check);
Json approximation_row(const CellularApproximation &a, double x0, const ApproximationError &e);
ResultTable robustness_table(const RobustnessReport &r);
ResultTable dirac_limit_table(const DiracLimitReport &r);
Json recurrence_json(const RecurrenceReport &r);

}  // namespace gtr
