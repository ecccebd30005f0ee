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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtr/cellular_approximation.h"
#include "gtr/errors.h"
#include "gtr/montecarlo.h"
#include "gtr/report.h"
#include "gtr/robustness.h"
#include "gtr/universal.h"

namespace gtr::cli {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(trim(cur));
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double parse_double(const std::string &s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw DomainError("not a number: '" + s + "'");
}

std::size_t parse_size(const std::string &s) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used == s.size() && s.find('-') == std::string::npos) {
            return static_cast<std::size_t>(v);
        }
    } catch (const std::exception &) {
    }
    throw DomainError("not a non-negative integer: '" + s + "'");
}

std::vector<double> parse_doubles(const std::string &s) {
    std::vector<double> v;
    for (const auto &p : split(s, ',')) {
        v.push_back(parse_double(p));
    }
    return v;
}

std::vector<std::size_t> parse_sizes(const std::string &s) {
    std::vector<std::size_t> v;
    for (const auto &p : split(s, ',')) {
        v.push_back(parse_size(p));
    }
    return v;
}

std::string join(const std::vector<double> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + format_double(v[i]);
    }
    return s;
}

/// simplex | cut<j> (1-based) | balls(<points>).
ControlSpec parse_geometry(const std::string &text, std::size_t n) {
    ControlSpec spec;
    if (text == "simplex") {
        spec.family = ControlFamily::ScaledSimplex;
    } else if (text.rfind("cut", 0) == 0) {
        const auto j = parse_size(text.substr(3));
        if (j < 1 || j > n) {
            throw DomainError("cut coordinate must be in 1.." + std::to_string(n));
        }
        spec.family = ControlFamily::CoordinateCut;
        spec.coord = j - 1;
    } else if (text.rfind("balls(", 0) == 0 && text.back() == ')') {
        spec.family = ControlFamily::Balls;
        spec.centers = parse_points(text.substr(6, text.size() - 7));
    } else {
        throw DomainError("unknown control geometry '" + text + "'");
    }
    return spec;
}

Density density_from_json(const nlohmann::json &j, std::size_t n) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw DomainError("density object needs a string \"kind\"");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "uniform") {
        return Density::uniform(n);
    }
    if (kind == "cellular_1d") {
        if (n != 2) {
            throw DomainError("cellular_1d densities need a two-outcome state");
        }
        return Density::cellular_1d(CellularMask::parse(j.at("mask").get<std::string>()));
    }
    if (kind == "grid") {
        const auto res = j.at("resolution").get<std::size_t>();
        return parse_density("grid:" + std::to_string(res) + ":" + j.value("mask", std::string("all")), n);
    }
    if (kind == "truncated") {
        const auto eps = j.at("epsilon").get<double>();
        const auto spec = parse_geometry(j.value("geometry", std::string("simplex")), n);
        return truncate(Density::uniform(n), spec.at(n, eps));
    }
    if (kind == "dirac") {
        std::vector<BarycentricState> pts;
        for (const auto &p : j.at("points")) {
            pts.emplace_back(p.get<std::vector<double>>());
        }
        return Density::dirac(std::move(pts), j.value("weights", std::vector<double>{}));
    }
    throw DomainError("unknown density kind '" + kind + "'");
}

void require_seed(const ExperimentConfig &c) {
    if (!c.seed) {
        throw DomainError("command '" + c.command + "' is stochastic and needs --seed");
    }
}

struct HelpRequested {
    std::string text;
};

struct Output {
    ResultTable table;
    Json parameters;
    Json summary;
    std::vector<std::string> lines;
};

Output run_simulate(const ExperimentConfig &c) {
    require_seed(c);
    const auto x = parse_state(c.state);
    const MonteCarloOptions mc{c.threads};
    Output o;
    o.parameters = {{"state", std::vector<double>(x.coords().begin(), x.coords().end())},
                    {"density", c.density},
                    {"samples", c.samples},
                    {"seed", *c.seed}};
    TransitionEstimate est;
    std::optional<std::vector<double>> exact;
    if (c.density.rfind("universal:", 0) == 0) {
        const auto n_c = parse_size(c.density.substr(10));
        est = estimate_universal(x, n_c, c.samples, 1, *c.seed, mc);
    } else {
        const auto rho = parse_density(c.density, x.n_outcomes());
        est = estimate(x, rho, c.samples, *c.seed, mc);
        try {
            exact = rho.region_probabilities(x);
        } catch (const NotAnalyticError &) {
        }
    }
    o.table = estimate_table(est);
    o.summary = {{"n_samples", est.n_samples},
                 {"boundary_hits", est.boundary_hits},
                 {"exact", exact ? Json(*exact) : Json(nullptr)}};
    for (std::size_t i = 0; i < est.n_outcomes(); ++i) {
        std::string line = "outcome " + std::to_string(i + 1) + ": p_hat=" + format_double(est.probabilities[i]) +
                           " ci=[" + format_double(est.intervals[i].lo) + ", " + format_double(est.intervals[i].hi) +
                           "]";
        if (exact) {
            line += " exact=" + format_double((*exact)[i]);
        }
        o.lines.push_back(line);
    }
    return o;
}

Output run_universal(const ExperimentConfig &c) {
    if (c.cells == 0 && c.n_max == 0) {
        throw DomainError("universal-exact needs --cells or --n-max");
    }
    const EnumerationOptions opts{c.max_cells, c.threads};
    std::vector<std::size_t> ns;
    if (c.cells > 0) {
        ns.push_back(c.cells);
    } else {
        for (std::size_t n = c.recurrence ? 3 : 2; n <= c.n_max; ++n) {
            ns.push_back(n);
        }
    }
    Output o;
    o.parameters = {{"cells", c.cells}, {"n_max", c.n_max},         {"abstract", c.abstract},
                    {"recurrence", c.recurrence}, {"max_cells", c.max_cells}};
    if (c.position) {
        o.parameters["position"] = *c.position;
    }
    bool all_equal = true;
    if (c.recurrence) {
        o.table.columns = {"n", "i", "term", "enumerated", "closed_form", "equal"};
        Json indices = Json::array();
        for (auto n : ns) {
            const std::size_t lo = c.position.value_or(1);
            const std::size_t hi = c.position ? *c.position : n - 2;
            for (std::size_t i = lo; i <= hi; ++i) {
                const auto r = recurrence_step_check(n, i, opts);
                all_equal = all_equal && r.all_equal();
                indices.push_back({{"n", n}, {"i", i}, {"matching_index", r.matching_index},
                                   {"per_mask_difference_holds", r.per_mask_difference_holds}});
                for (const auto &t : r.terms) {
                    o.table.add({{"n", n}, {"i", i}, {"term", t.name}, {"enumerated", to_string(t.enumerated)},
                                 {"closed_form", to_string(t.closed_form)}, {"equal", t.equal()}});
                }
            }
        }
        o.summary = {{"all_equal", all_equal}, {"checks", indices}};
    } else {
        o.table.columns = {"n", "i", "average", "uniform", "equal"};
        for (auto n : ns) {
            const std::size_t lo = c.position.value_or(c.abstract ? 0 : 1);
            const std::size_t hi = c.position ? *c.position : (c.abstract ? n : n - 1);
            for (std::size_t i = lo; i <= hi; ++i) {
                const auto avg = c.abstract ? universal_average_abstract(n, i, opts)
                                            : universal_average_1d(n, i, ElasticEnd::Left, opts);
                auto row = universal_row(n, i, avg);
                all_equal = all_equal && row["equal"].get<bool>();
                o.table.add(std::move(row));
            }
        }
        o.summary = {{"all_equal", all_equal}};
    }
    o.lines.push_back(std::string(c.recurrence ? "recurrence" : "universal average") + ": " +
                      std::to_string(o.table.rows.size()) + " rows, " + (all_equal ? "all equal" : "MISMATCH"));
    return o;
}

Output run_identities(const ExperimentConfig &c) {
    const std::size_t n_max = c.n_max > 0 ? c.n_max : 60;
    Output o;
    o.parameters = {{"n_max", n_max}};
    o.table.columns = {"n", "identity", "lhs", "rhs", "equal"};
    bool all_equal = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (auto [name, check] : {std::pair{"a", binomial_identity_a(n)}, std::pair{"b", binomial_identity_b(n)}}) {
            all_equal = all_equal && check.equal();
            o.table.add(identity_row(name, check));
        }
    }
    o.summary = {{"all_equal", all_equal}};
    o.lines.push_back("identities: " + std::to_string(o.table.rows.size()) + " checks, " +
                      (all_equal ? "all equal" : "MISMATCH"));
    return o;
}

Target1D parse_target(const std::string &text) {
    if (text == "uniform") {
        return uniform_target();
    }
    if (text == "ramp") {
        return ramp_target();
    }
    if (text == "truncated") {
        return truncated_uniform_target(0.3, 0.75);
    }
    if (text.rfind("truncated:", 0) == 0) {
        const auto v = parse_doubles(text.substr(10));
        if (v.size() != 2) {
            throw DomainError("truncated target takes lo,hi");
        }
        return truncated_uniform_target(v[0], v[1]);
    }
    throw DomainError("unknown target '" + text + "'");
}

Output run_approximate(const ExperimentConfig &c) {
    const auto target = parse_target(c.target);
    std::vector<std::size_t> ms = c.m.empty() ? std::vector<std::size_t>{8, 16, 32, 64} : c.m;
    std::vector<std::size_t> ells = c.ell.empty() ? ms : c.ell;
    if (ells.size() == 1) {
        ells.assign(ms.size(), ells.front());
    }
    if (ells.size() != ms.size()) {
        throw DomainError("--m and --ell need the same number of entries");
    }
    Output o;
    o.parameters = {{"target", c.target}, {"m", ms}, {"ell", ells}, {"x1", c.x1}};
    o.table.columns = {"m", "ell", "n_c", "n_breakable", "x1", "p_cell", "p_exact", "abs_error"};
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const auto approx = cellular_approximation(target, ms[k], ells[k]);
        for (double x0 : c.x1) {
            const auto e = approximation_error(approx, target, x0);
            o.table.add(approximation_row(approx, x0, e));
            o.lines.push_back("m=" + std::to_string(ms[k]) + " ell=" + std::to_string(ells[k]) +
                              " x1=" + format_double(x0) + ": |error|=" + format_double(e.abs_error));
        }
    }
    o.summary = Json::object();
    return o;
}

Output run_robustness(const ExperimentConfig &c) {
    require_seed(c);
    const auto x = parse_state(c.state);
    const std::size_t n = x.n_outcomes();
    if (c.outcome < 1 || c.outcome > n) {
        throw DomainError("--outcome must be in 1.." + std::to_string(n));
    }
    std::vector<double> delta;
    if (c.delta.empty()) {
        delta.assign(n, 0.0);
        delta[c.outcome - 1] = 0.01;
        delta[c.outcome % n] = -0.01;
    } else {
        delta = parse_doubles(c.delta);
    }
    const auto eps = c.epsilons.empty() ? std::vector<double>{1, 0.5, 0.25, 0.1, 0.05} : c.epsilons;
    const auto spec = parse_geometry(c.geometry, n);
    RobustnessOptions opts;
    opts.outcome = c.outcome - 1;
    opts.n_samples = c.samples;
    opts.seed = *c.seed;
    opts.threads = c.threads;
    opts.force_monte_carlo = c.monte_carlo;
    const auto report = robustness_sweep(x, delta, spec, eps, opts);

    Output o;
    o.parameters = {{"state", report.x},       {"delta", delta},          {"geometry", report.geometry},
                    {"epsilons", eps},         {"outcome", c.outcome},    {"samples", c.samples},
                    {"seed", *c.seed},         {"monte_carlo", c.monte_carlo}};
    o.table = robustness_table(report);
    const double g = report.geometric_epsilon_tilde;
    Json agrees = Json::array();
    for (const auto &row : report.rows) {
        agrees.push_back(row.agrees);
        o.lines.push_back("epsilon=" + format_double(row.epsilon) + ": measured=" + format_double(row.measured) +
                          " predicted=" + format_double(row.predicted) + (row.agrees ? " (agrees)" : ""));
    }
    o.summary = {{"geometric_epsilon_tilde", std::isfinite(g) ? Json(g) : Json(nullptr)},
                 {"empirical_epsilon_tilde",
                  report.empirical_epsilon_tilde ? Json(*report.empirical_epsilon_tilde) : Json(nullptr)},
                 {"agrees", agrees}};
    return o;
}

Output run_dirac_limit(const ExperimentConfig &c) {
    require_seed(c);
    const auto x = parse_state(c.state);
    if (c.points.empty()) {
        throw DomainError("dirac-limit needs --points");
    }
    const auto points = parse_points(c.points);
    const auto eps = c.epsilons.empty() ? std::vector<double>{0.5, 0.1, 0.01, 0.001} : c.epsilons;
    RobustnessOptions opts;
    opts.n_samples = c.samples;
    opts.seed = *c.seed;
    opts.threads = c.threads;
    const auto report = dirac_limit_demo(x, points, eps, opts);
    Output o;
    o.parameters = {{"state", report.x}, {"points", report.points}, {"epsilons", eps},
                    {"samples", c.samples}, {"seed", *c.seed}};
    o.table = dirac_limit_table(report);
    o.summary = {{"limit", report.limit}, {"final_tv_distance", report.rows.back().tv_distance}};
    for (const auto &row : report.rows) {
        o.lines.push_back("epsilon=" + format_double(row.epsilon) + ": tv=" + format_double(row.tv_distance) +
                          " p=(" + join(row.distribution) + ")");
    }
    return o;
}

std::vector<std::string> config_file_tokens(const std::string &path, std::string &command) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read config file '" + path + "'");
    }
    static const std::vector<std::string> kFlags = {"abstract", "recurrence", "monte-carlo"};
    std::vector<std::string> tokens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (key == "command") {
            command = value;
        } else if (std::find(kFlags.begin(), kFlags.end(), key) != kFlags.end()) {
            if (value == "true") {
                tokens.push_back("--" + key);
            } else if (value != "false") {
                throw DomainError(path + ":" + std::to_string(lineno) + ": " + key + " takes true or false");
            }
        } else {
            tokens.push_back("--" + key);
            tokens.push_back(value);
        }
    }
    return tokens;
}

}  // namespace

BarycentricState parse_state(const std::string &text) {
    if (trim(text).empty()) {
        throw DomainError("state is required (e.g. --state 0.2,0.3,0.5)");
    }
    return BarycentricState(parse_doubles(text));
}

std::vector<BarycentricState> parse_points(const std::string &text) {
    std::vector<BarycentricState> pts;
    for (const auto &p : split(text, ';')) {
        pts.push_back(parse_state(p));
    }
    return pts;
}

Density parse_density(const std::string &raw, std::size_t n) {
    const auto text = trim(raw);
    if (!text.empty() && text.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw DomainError(std::string("density JSON: ") + e.what());
        }
        try {
            return density_from_json(j, n);
        } catch (const nlohmann::json::exception &e) {
            throw DomainError(std::string("density JSON: ") + e.what());
        }
    }
    if (text == "uniform") {
        return Density::uniform(n);
    }
    const auto colon = text.find(':');
    const auto kind = text.substr(0, colon);
    const auto rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    if (kind == "cellular1d") {
        if (n != 2) {
            throw DomainError("cellular1d densities need a two-outcome state");
        }
        return Density::cellular_1d(CellularMask::parse(rest));
    }
    if (kind == "grid") {
        const auto parts = split(rest, ':');
        if (parts.size() != 2) {
            throw DomainError("grid density is grid:<resolution>:<mask|all>");
        }
        const auto res = parse_size(parts[0]);
        std::size_t cells = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            cells *= res;
        }
        std::vector<bool> mask(cells, true);
        if (parts[1] != "all") {
            const auto m = CellularMask::parse(parts[1]);
            if (m.n_cells() != cells) {
                throw DomainError("grid mask needs " + std::to_string(cells) + " cells");
            }
            for (std::size_t c = 0; c < cells; ++c) {
                mask[c] = m.breakable(c);
            }
        }
        return Density::cellular_grid(n, res, std::move(mask));
    }
    if (kind == "truncated") {
        const auto last = rest.rfind(':');
        if (last == std::string::npos) {
            throw DomainError("truncated density is truncated:<geometry>:<epsilon>");
        }
        const auto spec = parse_geometry(rest.substr(0, last), n);
        return truncate(Density::uniform(n), spec.at(n, parse_double(rest.substr(last + 1))));
    }
    if (kind == "dirac") {
        return Density::dirac(parse_points(rest));
    }
    throw DomainError("unknown density spec '" + text + "'");
}

ExperimentConfig parse_arguments(const std::vector<std::string> &args) {
    std::string file_command;
    std::vector<std::string> file_tokens;
    std::vector<std::string> cli_tokens;
    for (std::size_t a = 0; a < args.size(); ++a) {
        if (args[a] == "--config") {
            if (a + 1 >= args.size()) {
                throw DomainError("--config needs a file");
            }
            file_tokens = config_file_tokens(args[++a], file_command);
        } else if (args[a].rfind("--config=", 0) == 0) {
            file_tokens = config_file_tokens(args[a].substr(9), file_command);
        } else {
            cli_tokens.push_back(args[a]);
        }
    }
    std::string command = file_command;
    if (!cli_tokens.empty() && !cli_tokens.front().empty() && cli_tokens.front()[0] != '-') {
        command = cli_tokens.front();
        cli_tokens.erase(cli_tokens.begin());
    }

    ExperimentConfig c;
    CLI::App app{"Tension-reduction measurement toolkit", "gtr"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1, 1);

    std::string m_list, ell_list, x1_list, eps_list;
    std::optional<std::size_t> position;
    std::optional<std::uint64_t> seed;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--threads", c.threads, "Worker threads (results do not depend on it)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "Random seed");
        sub->add_option("--out", c.out, "Output file (default: stdout)");
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo transition probabilities");
    simulate->add_option("--state", c.state, "Barycentric state, e.g. 0.2,0.3,0.5")->required();
    simulate->add_option("--density", c.density, "Density spec or JSON object");
    simulate->add_option("--samples", c.samples, "Number of breaking points")->check(CLI::PositiveNumber);
    common(simulate);

    auto *universal = app.add_subcommand("universal-exact", "Exact average over all cellular masks");
    universal->add_option("--cells", c.cells, "Number of cells n");
    universal->add_option("--position", position, "Particle position i");
    universal->add_option("--n-max", c.n_max, "Tabulate every n up to this value");
    universal->add_option("--max-cells", c.max_cells, "Enumeration limit");
    universal->add_flag("--abstract", c.abstract, "Linearized form: fraction of breakable cells in the last n-i");
    universal->add_flag("--recurrence", c.recurrence, "Check the intermediate sums of the induction");
    common(universal);

    auto *identities = app.add_subcommand("identities", "Check both binomial identities");
    identities->add_option("--n-max", c.n_max, "Largest n (default 60)");
    common(identities);

    auto *approximate = app.add_subcommand("approximate", "Cellular approximation of a 1-D target density");
    approximate->add_option("--target", c.target, "uniform | ramp | truncated[:lo,hi]");
    approximate->add_option("--m", m_list, "Block counts, comma separated");
    approximate->add_option("--ell", ell_list, "Cells per block, comma separated");
    approximate->add_option("--x1", x1_list, "First weights of the state, comma separated");
    common(approximate);

    auto *robustness = app.add_subcommand("robustness", "Probability change under a perturbation versus epsilon");
    robustness->add_option("--state", c.state, "Barycentric state")->required();
    robustness->add_option("--delta", c.delta, "Perturbation summing to zero");
    robustness->add_option("--geometry", c.geometry, "simplex | cut<j> | balls(<points>)");
    robustness->add_option("--epsilons", eps_list, "Epsilon grid, comma separated");
    robustness->add_option("--outcome", c.outcome, "Outcome index (1-based)");
    robustness->add_option("--samples", c.samples, "Samples per epsilon (Monte Carlo rows)")
        ->check(CLI::PositiveNumber);
    robustness->add_flag("--monte-carlo", c.monte_carlo, "Use Monte Carlo even where a closed form exists");
    common(robustness);

    auto *dirac = app.add_subcommand("dirac-limit", "Outcome distribution as the breakable zone shrinks onto points");
    dirac->add_option("--state", c.state, "Barycentric state")->required();
    dirac->add_option("--points", c.points, "Points a,b,c;d,e,f")->required();
    dirac->add_option("--epsilons", eps_list, "Decreasing epsilon sequence");
    dirac->add_option("--samples", c.samples, "Samples per epsilon")->check(CLI::PositiveNumber);
    common(dirac);

    std::vector<std::string> argv;
    if (!command.empty()) {
        argv.push_back(command);
    }
    argv.insert(argv.end(), file_tokens.begin(), file_tokens.end());
    argv.insert(argv.end(), cli_tokens.begin(), cli_tokens.end());
    std::reverse(argv.begin(), argv.end());  // CLI11 consumes a reversed vector
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &) {
        CLI::App *sub = nullptr;
        for (auto *s : app.get_subcommands({})) {
            if (s->get_name() == command) {
                sub = s;
            }
        }
        throw HelpRequested{sub ? sub->help() : app.help()};
    }

    c.command = app.get_subcommands().front()->get_name();
    c.position = position;
    c.seed = seed;
    if (!m_list.empty()) {
        c.m = parse_sizes(m_list);
    }
    if (!ell_list.empty()) {
        c.ell = parse_sizes(ell_list);
    }
    if (!x1_list.empty()) {
        c.x1 = parse_doubles(x1_list);
    }
    if (!eps_list.empty()) {
        c.epsilons = parse_doubles(eps_list);
    }
    return c;
}

void execute(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    Output o;
    if (c.command == "simulate") {
        o = run_simulate(c);
    } else if (c.command == "universal-exact") {
        o = run_universal(c);
    } else if (c.command == "identities") {
        o = run_identities(c);
    } else if (c.command == "approximate") {
        o = run_approximate(c);
    } else if (c.command == "robustness") {
        o = run_robustness(c);
    } else if (c.command == "dirac-limit") {
        o = run_dirac_limit(c);
    } else {
        throw DomainError("unknown command '" + c.command + "'");
    }
    const std::string content = c.format == "json"
                                    ? make_document(c.command, o.parameters, o.summary, o.table).dump(2) + "\n"
                                    : to_csv(o.table);
    std::ostream *summary = &err;
    if (c.out.empty()) {
        out << content;
    } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file || !(file << content) || !file.flush()) {
            throw std::runtime_error("cannot write output file '" + c.out + "'");
        }
        summary = &out;
    }
    for (const auto &line : o.lines) {
        *summary << line << '\n';
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        execute(parse_arguments(args), out, err);
        return kExitOk;
    } catch (const HelpRequested &h) {
        out << h.text;
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace gtr::cli
