// Copyright 2026 The ccopt Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "ccopt/errors.hpp"
#include "ccopt/explorer.hpp"
#include "ccopt/problem.hpp"
#include "ccopt/report.hpp"
#include "ccopt/scenario.hpp"
#include "ccopt/study.hpp"
#include "ccopt/violation.hpp"
#include "json.hpp"

namespace ccopt::cli {
namespace {

using nlohmann::ordered_json;

/// Every knob a run can take; defaults are the documented ones.
struct Settings {
  std::string problem{kBenchmarkName};
  std::string method = "two-layer";
  std::size_t trials = 500;
  std::uint64_t seed = kDefaultSeed;
  std::size_t oracle_n = kDefaultOracleSamples;
  std::size_t n_decisions = 100;
  std::size_t n_disturbances = 1000;
  double alpha_eps = 0.005;
  std::size_t iterations = 50;
  std::size_t n_scenarios = 100;
  std::size_t search_points = 100000;
};

/// Flag values; unset optionals leave the config value alone.
struct Overrides {
  std::optional<std::string> problem;
  std::optional<std::string> method;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> oracle_n;
  std::optional<std::size_t> n_decisions;
  std::optional<std::size_t> n_disturbances;
  std::optional<double> alpha_eps;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> n_scenarios;
  std::optional<std::size_t> search_points;
};

/// Options shared by the config-driven subcommands.
struct CommonOptions {
  std::optional<std::string> config_path;
  std::optional<std::string> output_prefix;
  std::size_t workers = 0;
  bool plot = false;
  bool traces = false;
  Overrides overrides;
};

template <class T>
T read_field(const ordered_json& doc, const std::string& key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(key, "has the wrong type");
  }
}

std::size_t read_count(const ordered_json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0)) {
    throw ConfigError(key, "must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const std::vector<std::string> kSettingKeys = {
    "problem",       "method",      "trials",     "seed",        "oracle_n",     "n_decisions",
    "n_disturbances", "alpha_eps",  "iterations", "n_scenarios", "search_points"};

void apply_json(const ordered_json& doc, Settings& s) {
  if (doc.contains("problem")) s.problem = read_field<std::string>(doc, "problem");
  if (doc.contains("method")) s.method = read_field<std::string>(doc, "method");
  if (doc.contains("trials")) s.trials = read_count(doc, "trials");
  if (doc.contains("seed")) s.seed = read_count(doc, "seed");
  if (doc.contains("oracle_n")) s.oracle_n = read_count(doc, "oracle_n");
  if (doc.contains("n_decisions")) s.n_decisions = read_count(doc, "n_decisions");
  if (doc.contains("n_disturbances")) s.n_disturbances = read_count(doc, "n_disturbances");
  if (doc.contains("alpha_eps")) {
    if (!doc.at("alpha_eps").is_number()) throw ConfigError("alpha_eps", "must be a number");
    s.alpha_eps = doc.at("alpha_eps").get<double>();
  }
  if (doc.contains("iterations")) s.iterations = read_count(doc, "iterations");
  if (doc.contains("n_scenarios")) s.n_scenarios = read_count(doc, "n_scenarios");
  if (doc.contains("search_points")) s.search_points = read_count(doc, "search_points");
}

void apply_overrides(const Overrides& o, Settings& s) {
  if (o.problem) s.problem = *o.problem;
  if (o.method) s.method = *o.method;
  if (o.trials) s.trials = *o.trials;
  if (o.seed) s.seed = *o.seed;
  if (o.oracle_n) s.oracle_n = *o.oracle_n;
  if (o.n_decisions) s.n_decisions = *o.n_decisions;
  if (o.n_disturbances) s.n_disturbances = *o.n_disturbances;
  if (o.alpha_eps) s.alpha_eps = *o.alpha_eps;
  if (o.iterations) s.iterations = *o.iterations;
  if (o.n_scenarios) s.n_scenarios = *o.n_scenarios;
  if (o.search_points) s.search_points = *o.search_points;
}

ordered_json to_json(const Settings& s) {
  return ordered_json{{"problem", s.problem},
                      {"method", s.method},
                      {"trials", s.trials},
                      {"seed", s.seed},
                      {"oracle_n", s.oracle_n},
                      {"n_decisions", s.n_decisions},
                      {"n_disturbances", s.n_disturbances},
                      {"alpha_eps", s.alpha_eps},
                      {"iterations", s.iterations},
                      {"n_scenarios", s.n_scenarios},
                      {"search_points", s.search_points}};
}

ExplorerConfig explorer_config(const Settings& s, std::size_t workers) {
  ExplorerConfig c;
  c.n_decisions = s.n_decisions;
  c.n_disturbances = s.n_disturbances;
  c.alpha_margin = s.alpha_eps;
  c.max_iterations = s.iterations;
  c.seed = s.seed;
  c.workers = workers;
  return c;
}

ScenarioConfig scenario_config(const Settings& s, std::size_t workers) {
  ScenarioConfig c;
  c.n_scenarios = s.n_scenarios;
  c.search_points = s.search_points;
  c.seed = s.seed;
  c.workers = workers;
  return c;
}

ordered_json build_info() {
  return ordered_json{{"version", "0.1.0"},
                      {"compiler", __VERSION__},
                      {"cplusplus", __cplusplus},
                      {"generator", std::string(kGeneratorName)},
                      {"normal_method", std::string(kNormalMethod)}};
}

ordered_json estimate_json(const ViolationEstimate& e) {
  return ordered_json{{"violations", e.violations},
                      {"sample_count", e.sample_count},
                      {"v_hat", e.v_hat},
                      {"std_error", e.std_error}};
}

ordered_json aggregates_json(const StudyAggregates& a) {
  auto num = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  return ordered_json{{"trials", a.trials},
                      {"succeeded", a.succeeded},
                      {"mean_cost", num(a.mean_cost)},
                      {"min_cost", num(a.min_cost)},
                      {"max_cost", num(a.max_cost)},
                      {"stddev_cost", num(a.stddev_cost)},
                      {"mean_oracle_violation", num(a.mean_oracle_violation)},
                      {"fraction_within_alpha", a.fraction_within_alpha}};
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "' (file not found?)");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", "malformed JSON in '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "top level must be an object");
  // A meta file from an earlier run carries the resolved config under "config".
  if (doc.contains("config") && doc.at("config").is_object()) return doc.at("config");
  return doc;
}

void reject_unknown_keys(const ordered_json& doc, const std::vector<std::string>& extra) {
  for (const auto& [key, value] : doc.items()) {
    const bool known = std::find(kSettingKeys.begin(), kSettingKeys.end(), key) !=
                           kSettingKeys.end() ||
                       std::find(extra.begin(), extra.end(), key) != extra.end();
    if (!known) throw ConfigError(key, "unknown field");
  }
}

std::filesystem::path resolve_prefix(const std::string& prefix) {
  std::filesystem::path p(prefix);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix, std::string_view suffix) {
  return std::filesystem::path(prefix.string() + std::string(suffix));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_json(const std::filesystem::path& path, const ordered_json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

void add_setting_flags(CLI::App& cmd, Overrides& o, bool explorer, bool scenario, bool study) {
  cmd.add_option("--problem", o.problem, "Problem name (" + std::string(kBenchmarkName) + ")");
  cmd.add_option("--seed", o.seed, "Root seed (default " + std::to_string(kDefaultSeed) + ")");
  if (explorer) {
    cmd.add_option("--n-decisions", o.n_decisions, "Decision samples per iteration (N_u)");
    cmd.add_option("--n-disturbances", o.n_disturbances,
                   "Disturbance samples per iteration (N_delta)");
    cmd.add_option("--alpha-eps", o.alpha_eps, "Filter margin; discard when v_hat > alpha - alpha_eps");
    cmd.add_option("--iterations", o.iterations, "Iterations per run");
  }
  if (scenario) {
    cmd.add_option("--n-scenarios", o.n_scenarios, "Scenario count N");
    cmd.add_option("--search-points", o.search_points, "Sampled search points M");
  }
  if (study) {
    cmd.add_option("--method", o.method, "two-layer or scenario");
    cmd.add_option("--trials", o.trials, "Number of independent trials");
  }
  if (study || scenario) {
    cmd.add_option("--oracle-n", o.oracle_n, "Oracle samples used to score final points");
  }
}

Settings resolve(const CommonOptions& opts, const std::vector<std::string>& extra_keys,
                 ordered_json* doc_out = nullptr) {
  Settings s;
  if (opts.config_path) {
    ordered_json doc = load_json_file(*opts.config_path);
    reject_unknown_keys(doc, extra_keys);
    apply_json(doc, s);
    if (doc_out) *doc_out = doc;
  }
  apply_overrides(opts.overrides, s);
  return s;
}

int cmd_bound(double alpha, double beta, std::size_t n_u, std::ostream& out) {
  out << scenario_bound(alpha, beta, n_u) << '\n';
  return kExitOk;
}

int cmd_oracle(const std::vector<double>& point, std::size_t n, std::uint64_t seed,
               const std::string& problem_name, std::ostream& out) {
  const auto problem = make_problem(problem_name);
  if (point.size() != problem.decision_dimension()) {
    throw ConfigError("point", "expected " + std::to_string(problem.decision_dimension()) +
                                   " coordinates, got " + std::to_string(point.size()));
  }
  if (n < kOracleMinSamples) {
    throw ConfigError("n", "must be at least " + std::to_string(kOracleMinSamples));
  }
  const DecisionPoint u(point);
  const auto estimate =
      oracle_violation(problem, u, n, RngStream::derive(seed, {0, 0, StreamPurpose::kOracle}));
  ordered_json doc{{"problem", problem.name()}, {"point", point}, {"seed", seed}};
  doc.update(estimate_json(estimate));
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_solve(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const Settings s = resolve(opts, {});
  const auto problem = make_problem(s.problem);
  const auto config = explorer_config(s, opts.workers);
  config.validate(problem);

  const auto trace = explore(problem, config);
  const auto prefix = resolve_prefix(opts.output_prefix.value_or("solve"));

  std::ostringstream csv;
  write_trace_csv(csv, trace, problem.decision_dimension());
  write_text(with_suffix(prefix, ".trace.csv"), csv.str());

  ordered_json result{{"problem", problem.name()},
                      {"status", trace.found() ? "ok" : "failed"},
                      {"constraint_evaluations", trace.constraint_evaluations},
                      {"cost_evaluations", trace.cost_evaluations}};
  if (trace.final) {
    result["point"] = trace.final->point.values();
    result["cost"] = trace.final->cost;
    result["estimate"] = estimate_json(trace.final->estimate);
  } else {
    result["reason"] = "no candidate passed the violation filter in any iteration";
  }
  write_json(with_suffix(prefix, ".json"), result);
  ordered_json meta{{"command", "solve"},
                    {"config", to_json(s)},
                    {"build", build_info()},
                    {"outputs", {with_suffix(prefix, ".trace.csv").string(),
                                 with_suffix(prefix, ".json").string()}}};
  write_json(with_suffix(prefix, ".meta.json"), meta);
  out << result.dump(2) << '\n';
  if (!trace.found()) {
    err << "error: no feasible candidate found\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_scenario(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const Settings s = resolve(opts, {});
  const auto problem = make_problem(s.problem);
  const auto config = scenario_config(s, opts.workers);
  config.validate();
  if (s.oracle_n < kOracleMinSamples) {
    throw ConfigError("oracle_n", "must be at least " + std::to_string(kOracleMinSamples));
  }

  const auto solved = solve_scenario(problem, config);
  const auto prefix = resolve_prefix(opts.output_prefix.value_or("scenario"));
  ordered_json result{{"problem", problem.name()},
                      {"status", solved.found() ? "ok" : "failed"},
                      {"n_scenarios", solved.n_scenarios},
                      {"search_points", solved.search_points},
                      {"points_checked", solved.points_checked},
                      {"constraint_evaluations", solved.constraint_evaluations}};
  if (solved.point) {
    result["point"] = solved.point->values();
    result["cost"] = solved.cost;
    result["oracle"] = estimate_json(oracle_violation(
        problem, *solved.point, s.oracle_n,
        RngStream::derive(s.seed, {0, 0, StreamPurpose::kOracle})));
  } else {
    result["reason"] = "no search point satisfies every scenario";
  }
  write_json(with_suffix(prefix, ".json"), result);
  ordered_json meta{{"command", "scenario"},
                    {"config", to_json(s)},
                    {"build", build_info()},
                    {"outputs", {with_suffix(prefix, ".json").string()}}};
  write_json(with_suffix(prefix, ".meta.json"), meta);
  out << result.dump(2) << '\n';
  if (!solved.found()) {
    err << "error: scenario program infeasible on the sampled search points\n";
    return kExitRuntime;
  }
  return kExitOk;
}

StudyConfig study_config(const Settings& s, std::size_t workers, bool traces) {
  StudyConfig c;
  c.trials = s.trials;
  c.method = parse_method(s.method);
  c.explorer = explorer_config(s, 1);
  c.scenario = scenario_config(s, 1);
  c.oracle_n = s.oracle_n;
  c.root_seed = s.seed;
  c.workers = workers;
  c.keep_traces = traces;
  return c;
}

int cmd_study(const CommonOptions& opts, std::ostream& out) {
  ordered_json doc = ordered_json::object();
  Settings base = resolve(opts, {"name", "plot", "traces", "runs"}, &doc);

  std::string name = opts.output_prefix.value_or(
      doc.contains("name") ? read_field<std::string>(doc, "name") : "study");
  const bool plot = opts.plot || (doc.contains("plot") && read_field<bool>(doc, "plot"));
  const bool traces = opts.traces || (doc.contains("traces") && read_field<bool>(doc, "traces"));

  // Each entry of "runs" overrides the top-level keys; flags override both.
  std::vector<Settings> runs;
  if (doc.contains("runs")) {
    const auto& list = doc.at("runs");
    if (!list.is_array() || list.empty()) throw ConfigError("runs", "must be a non-empty array");
    for (const auto& entry : list) {
      if (!entry.is_object()) throw ConfigError("runs", "entries must be objects");
      reject_unknown_keys(entry, {});
      Settings s;
      apply_json(doc, s);
      apply_json(entry, s);
      apply_overrides(opts.overrides, s);
      runs.push_back(s);
    }
  } else {
    runs.push_back(base);
  }

  std::vector<std::pair<ChanceConstrainedProblem, StudyConfig>> plans;
  for (const auto& s : runs) {
    auto problem = make_problem(s.problem);
    auto config = study_config(s, opts.workers, traces);
    config.validate(problem);
    plans.emplace_back(std::move(problem), std::move(config));
  }
  if (plot) {
    for (const auto& [problem, config] : plans) {
      if (problem.decision_dimension() != 2) {
        throw ConfigError("plot", "scatter plots need a 2-D decision space");
      }
    }
  }

  const auto prefix = resolve_prefix(name);
  const bool single = runs.size() == 1;
  std::vector<StudyResult> results;
  ordered_json outputs = ordered_json::array();
  ordered_json summaries = ordered_json::array();
  for (std::size_t r = 0; r < plans.size(); ++r) {
    const auto& [problem, config] = plans[r];
    StudyResult result = run_study(problem, config);
    const auto run_prefix =
        single ? prefix : with_suffix(prefix, "-" + std::to_string(r));
    const auto csv_path = with_suffix(run_prefix, ".csv");
    emit_csv(result, csv_path);
    outputs.push_back(csv_path.string());
    if (traces && config.method == Method::kTwoLayer) {
      for (std::size_t t = 0; t < result.traces.size(); ++t) {
        std::ostringstream csv;
        write_trace_csv(csv, result.traces[t], result.dimension);
        const auto path = with_suffix(run_prefix, ".trace-" + std::to_string(t) + ".csv");
        write_text(path, csv.str());
        outputs.push_back(path.string());
      }
    }
    ordered_json summary{{"label", result.label}, {"csv", csv_path.string()}};
    summary.update(aggregates_json(result.aggregates));
    summaries.push_back(summary);
    out << result.label << ": trials=" << result.aggregates.trials
        << " succeeded=" << result.aggregates.succeeded
        << " mean_cost=" << format_real(result.aggregates.mean_cost)
        << " mean_oracle_violation=" << format_real(result.aggregates.mean_oracle_violation)
        << " within_alpha=" << format_real(result.aggregates.fraction_within_alpha) << '\n';
    results.push_back(std::move(result));
  }
  if (plot) {
    const auto svg_path = with_suffix(prefix, ".svg");
    emit_scatter_plot(results, plans.front().first.domain(), svg_path);
    outputs.push_back(svg_path.string());
  }

  ordered_json config_doc;
  if (single) {
    config_doc = to_json(runs.front());
  } else {
    config_doc = ordered_json::object();
    config_doc["runs"] = ordered_json::array();
    for (const auto& s : runs) config_doc["runs"].push_back(to_json(s));
  }
  config_doc["name"] = name;
  config_doc["plot"] = plot;
  config_doc["traces"] = traces;
  ordered_json meta{{"command", "study"},
                    {"config", config_doc},
                    {"build", build_info()},
                    {"outputs", outputs},
                    {"summary", summaries}};
  write_json(with_suffix(prefix, ".meta.json"), meta);
  return kExitOk;
}

void add_common(CLI::App& cmd, CommonOptions& opts, const std::string& default_prefix) {
  cmd.add_option("--config", opts.config_path, "JSON config (or a previous run's meta.json)");
  cmd.add_option("--output-prefix", opts.output_prefix,
                 "Output path prefix (default '" + default_prefix + "'; relative to $" +
                     std::string(kOutputDirEnv) + " when set)");
  cmd.add_option("--workers", opts.workers, "Worker threads (0 = available parallelism)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chance-constrained optimization by two-layer randomized search", "ccopt"};
  app.require_subcommand(1);

  CommonOptions solve_opts, scenario_opts, study_opts;

  auto* solve = app.add_subcommand("solve", "Run the two-layer explorer once");
  add_common(*solve, solve_opts, "solve");
  add_setting_flags(*solve, solve_opts.overrides, true, false, false);

  auto* scenario = app.add_subcommand("scenario", "Solve the scenario program by sampled search");
  add_common(*scenario, scenario_opts, "scenario");
  add_setting_flags(*scenario, scenario_opts.overrides, false, true, false);

  auto* study = app.add_subcommand("study", "Monte Carlo study of repeated trials");
  add_common(*study, study_opts, "study");
  add_setting_flags(*study, study_opts.overrides, true, true, true);
  study->add_flag("--plot", study_opts.plot, "Also write <prefix>.svg");
  study->add_flag("--traces", study_opts.traces, "Write every trial's explorer trace CSV");

  double alpha = 0.05, beta = 0.01;
  std::size_t n_u = 2;
  auto* bound = app.add_subcommand("bound", "Print the scenario sample-count lower bound");
  bound->add_option("--alpha", alpha, "Violation level")->required();
  bound->add_option("--beta", beta, "Confidence parameter")->required();
  bound->add_option("--nu", n_u, "Decision dimension")->required();

  std::vector<double> point;
  std::size_t oracle_n = kDefaultOracleSamples;
  std::uint64_t oracle_seed = kDefaultSeed;
  std::string oracle_problem{kBenchmarkName};
  auto* oracle = app.add_subcommand("oracle", "High-sample violation estimate at one point");
  oracle->add_option("--point", point, "Decision coordinates, comma separated")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  oracle->add_option("--n", oracle_n, "Sample count (>= 100000)");
  oracle->add_option("--seed", oracle_seed, "Root seed");
  oracle->add_option("--problem", oracle_problem, "Problem name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*bound) return cmd_bound(alpha, beta, n_u, out);
    if (*oracle) return cmd_oracle(point, oracle_n, oracle_seed, oracle_problem, out);
    if (*solve) return cmd_solve(solve_opts, out, err);
    if (*scenario) return cmd_scenario(scenario_opts, out, err);
    if (*study) return cmd_study(study_opts, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace ccopt::cli
