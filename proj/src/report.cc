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

#include "gtr/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gtr {

namespace {

std::string csv_field(const Json &v) {
    switch (v.type()) {
        case Json::value_t::number_float:
            return format_double(v.get<double>());
        case Json::value_t::number_integer:
            return std::to_string(v.get<long long>());
        case Json::value_t::number_unsigned:
            return std::to_string(v.get<unsigned long long>());
        case Json::value_t::boolean:
            return v.get<bool>() ? "true" : "false";
        case Json::value_t::string: {
            const auto s = v.get<std::string>();
            if (s.find_first_of(",\"\n") == std::string::npos) {
                return s;
            }
            std::string quoted = "\"";
            for (char c : s) {
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            return quoted + "\"";
        }
        case Json::value_t::null:
            return "";
        default:
            return csv_field(Json(v.dump()));
    }
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

void ResultTable::add(Json row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row does not match table columns");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const ResultTable &table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << csv_field(row.at(table.columns[c]));
        }
        out << '\n';
    }
    return out.str();
}

Json make_document(const std::string &command, Json parameters, Json summary, const ResultTable &table) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["summary"] = std::move(summary);
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    return doc;
}

ResultTable estimate_table(const TransitionEstimate &e) {
    ResultTable t{{"outcome_index", "count", "p_hat", "ci_lo", "ci_hi"}};
    for (std::size_t i = 0; i < e.n_outcomes(); ++i) {
        Json row;
        row["outcome_index"] = i + 1;
        row["count"] = e.counts[i];
        row["p_hat"] = e.probabilities[i];
        row["ci_lo"] = e.intervals[i].lo;
        row["ci_hi"] = e.intervals[i].hi;
        t.add(std::move(row));
    }
    return t;
}

Json universal_row(std::size_t n, std::size_t i, const ExactProbability &average) {
    const ExactProbability uniform(Rational(static_cast<long long>(n - i), static_cast<long long>(n)));
    Json row;
    row["n"] = n;
    row["i"] = i;
    row["average"] = average.to_string();
    row["uniform"] = uniform.to_string();
    row["equal"] = average == uniform;
    return row;
}

Json identity_row(const std::string &name, const IdentityCheck &check) {
    Json row;
    row["n"] = check.n;
    row["identity"] = name;
    row["lhs"] = to_string(check.lhs);
    row["rhs"] = to_string(check.rhs);
    row["equal"] = check.equal();
    return row;
}

Json approximation_row(const CellularApproximation &a, double x0, const ApproximationError &e) {
    Json row;
    row["m"] = a.m;
    row["ell"] = a.ell;
    row["n_c"] = a.band.mask().n_cells();
    row["n_breakable"] = a.band.mask().n_breakable();
    row["x1"] = x0;
    row["p_cell"] = e.p_cell;
    row["p_exact"] = e.p_exact;
    row["abs_error"] = e.abs_error;
    return row;
}

ResultTable robustness_table(const RobustnessReport &r) {
    ResultTable t{{"epsilon", "measured", "predicted", "ratio", "std_error"}};
    for (const auto &row : r.rows) {
        Json j;
        j["epsilon"] = row.epsilon;
        j["measured"] = row.measured;
        j["predicted"] = row.predicted;
        j["ratio"] = finite_or_null(row.ratio);
        j["std_error"] = row.std_error;
        t.add(std::move(j));
    }
    return t;
}

ResultTable dirac_limit_table(const DiracLimitReport &r) {
    ResultTable t{{"epsilon", "tv_distance"}};
    for (std::size_t i = 0; i < r.limit.size(); ++i) {
        t.columns.push_back("p_" + std::to_string(i + 1));
    }
    for (const auto &row : r.rows) {
        Json j;
        j["epsilon"] = row.epsilon;
        j["tv_distance"] = row.tv_distance;
        for (std::size_t i = 0; i < row.distribution.size(); ++i) {
            j["p_" + std::to_string(i + 1)] = row.distribution[i];
        }
        t.add(std::move(j));
    }
    return t;
}

Json recurrence_json(const RecurrenceReport &r) {
    Json j;
    j["n"] = r.n;
    j["i"] = r.i;
    j["per_mask_difference_holds"] = r.per_mask_difference_holds;
    j["difference_sum_index_n_minus_1"] = to_string(r.difference_sum_index_n_minus_1);
    j["difference_sum_index_n"] = to_string(r.difference_sum_index_n);
    j["matching_index"] = r.matching_index;
    Json terms = Json::array();
    for (const auto &t : r.terms) {
        terms.push_back({{"name", t.name},
                         {"enumerated", to_string(t.enumerated)},
                         {"closed_form", to_string(t.closed_form)},
                         {"equal", t.equal()}});
    }
    j["terms"] = std::move(terms);
    j["all_equal"] = r.all_equal();
    return j;
}

}  // namespace gtr
