// Copyright 2026 The semicycle Authors
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

#include "semicycle_cli/run.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "output.h"
#include "problem_json.h"
#include "psi_cache.h"
#include "semicycle/analysis.h"
#include "semicycle/errors.h"
#include "semicycle/repro.h"
#include "semicycle/spectral.h"

namespace semicycle::cli {
namespace {

using nlohmann::json;

// A library failure tagged with the operation that raised it.
class OperationError : public std::runtime_error {
 public:
  OperationError(const std::string& op, const std::string& what)
      : std::runtime_error(op + ": " + what) {}
};

template <typename F>
auto call(const char* op, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw OperationError(op, e.what());
  }
}

// Invalid flag values found after CLI parsing.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_range(const std::string& text, const char* flag) {
  auto to_double = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError(fmt::format("{}: cannot parse '{}'", flag, s));
    }
  };
  std::vector<std::string> parts;
  char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  std::vector<double> values;
  if (sep == ':') {
    if (parts.size() != 3) throw UsageError(fmt::format("{}: expected lo:hi:step", flag));
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0) || hi < lo) throw UsageError(fmt::format("{}: empty range", flag));
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
      // Strip accumulated representation noise such as 2.8000000000000003.
      const double v = lo + static_cast<double>(i) * step;
      values.push_back(std::stod(fmt::format("{:.12g}", v)));
    }
  } else {
    for (const std::string& p : parts) values.push_back(to_double(p));
  }
  if (values.empty()) throw UsageError(fmt::format("{}: empty range", flag));
  return values;
}

std::pair<int, int> parse_branches(const std::string& text) {
  try {
    if (const auto pos = text.find(".."); pos != std::string::npos) {
      return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
    }
    return {0, std::stoi(text)};
  } catch (const std::exception&) {
    throw UsageError("--branches: expected n or a..b");
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
  } else {
    write_atomically(config.output_path, text);
  }
}

void emit_svg(const RunConfig& config, const std::vector<Series>& series,
              const std::string& title) {
  if (!config.svg_path.empty()) write_atomically(config.svg_path, svg_plot(series, title));
}

double horizon_or(const RunConfig& config, double fallback) {
  return config.horizon > 0 ? config.horizon : fallback;
}

std::unique_ptr<PsiCache> open_cache(const RunConfig& config) {
  if (!config.use_cache) return nullptr;
  return std::make_unique<PsiCache>(PsiCache::path_for(config.grid, config.tol), config.grid,
                                    config.tol);
}

double cached_psi(std::unique_ptr<PsiCache>& cache, const RunConfig& config, double rho,
                  double delta) {
  if (cache) return cache->get(rho, delta);
  return beta_iterate(rho, delta, config.grid, config.tol).psi;
}

// Fills the cache for every (rho, delta) pair using the worker pool.
void prefetch(std::unique_ptr<PsiCache>& cache, const RunConfig& config,
              const std::vector<std::pair<double, double>>& cells,
              std::vector<double>& values) {
  values.assign(cells.size(), 0.0);
  parallel_for(cells.size(), config.jobs, [&](std::size_t i) {
    values[i] = call("beta_iterate", [&] {
      return cached_psi(cache, config, cells[i].first, cells[i].second);
    });
  });
  if (cache) cache->flush();
}

int cmd_thresholds(const RunConfig& config, std::ostream& out) {
  const std::vector<double> deltas = parse_range(config.delta_range, "--delta");
  if (!(config.rho > 0)) throw UsageError("--rho must be positive");
  std::unique_ptr<PsiCache> cache = open_cache(config);
  std::vector<std::pair<double, double>> cells;
  for (double d : deltas) {
    cells.emplace_back(config.rho, d);
    if (config.rho != 1.0) cells.emplace_back(1.0, d);
  }
  std::vector<double> values;
  prefetch(cache, config, cells, values);

  std::string text = config.rho == 1.0
                         ? "delta,theta,psi_rho_1,threshold\n"
                         : fmt::format("delta,theta,psi_rho_{},threshold\n", num(config.rho));
  std::vector<Series> plot(2);
  plot[0].label = "psi";
  plot[1].label = "threshold";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double d = deltas[i];
    const double th = call("theta", [&] { return theta(d); });
    const double p = config.rho == 1.0 ? values[i] : values[2 * i];
    const double p1 = config.rho == 1.0 ? values[i] : values[2 * i + 1];
    text += fmt::format("{},{},{},{}\n", num(d), num(th), num(p), num(p1 + th));
    plot[0].points.emplace_back(d, p);
    plot[1].points.emplace_back(d, p1 + th);
  }
  emit(config, text, out);
  emit_svg(config, plot, "thresholds against delay");
  return kExitOk;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const std::vector<double> rhos = parse_range(config.rho_range, "--rho-range");
  const std::vector<double> deltas = parse_range(config.delta_range, "--delta");
  for (double r : rhos) {
    if (!(r > 0)) throw UsageError("--rho-range values must be positive");
  }
  std::unique_ptr<PsiCache> cache = open_cache(config);
  std::vector<std::pair<double, double>> cells;
  for (double r : rhos) {
    for (double d : deltas) cells.emplace_back(r, d);
  }
  std::vector<double> values;
  prefetch(cache, config, cells, values);
  std::string text = "rho,delta,psi,theta\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double th = call("theta", [&] { return theta(cells[i].second); });
    text += fmt::format("{},{},{},{}\n", num(cells[i].first), num(cells[i].second),
                        num(values[i]), num(th));
  }
  emit(config, text, out);
  return kExitOk;
}

DelayProblem input_problem(const RunConfig& config) {
  if (!config.input_path) throw UsageError("--input is required");
  return read_problem(*config.input_path);
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  const DelayProblem problem = input_problem(config);
  const double horizon = horizon_or(config, problem.start + 20.0);
  const Trajectory traj =
      call("integrate", [&] { return integrate(problem, horizon, config.step); });
  std::string text = "t,x,dx\n";
  Series series{"x", {}};
  for (const TrajectoryNode& n : traj.nodes()) {
    text += fmt::format("{},{},{}\n", num(n.t), num(n.x), num(n.dx));
    series.points.emplace_back(n.t, n.x);
  }
  emit(config, text, out);
  emit_svg(config, {series}, "solution");
  return kExitOk;
}

json classification_json(const DelayProblem& problem, const Classification& c,
                         double horizon) {
  json report;
  report["verdict"] = to_string(c.verdict);
  report["scale"] = c.scale;
  report["degenerate_zeros"] = c.degenerate_zeros;
  report["semicycles"] = json::array();
  for (const Semicycle& s : c.semicycles) {
    report["semicycles"].push_back(
        {{"a", s.a}, {"b", s.b}, {"w", s.w}, {"peak", s.peak}, {"length", s.length()}});
  }
  report["evidence"] = json::array();
  for (const Evidence& e : c.evidence) {
    report["evidence"].push_back(
        {{"name", e.name}, {"value", e.value}, {"threshold", e.threshold}});
  }
  const MyshkisResult m = criterion_myshkis(problem);
  const GustafsonResult g = criterion_gustafson(problem, horizon);
  const WronskianCriterion w = criterion_wronskian_2e(problem);
  report["criteria"] = {
      {"myshkis", {{"applicable", m.applicable}, {"holds", m.holds}, {"value", m.value}}},
      {"gustafson",
       {{"applicable", g.applicable}, {"holds", g.holds}, {"sup", g.sup_value}}},
      {"wronskian_2e", {{"holds", w.holds}, {"value", w.value}}}};
  return report;
}

ExampleSpec example_spec(const RunConfig& config) {
  if (config.periods < 1) throw UsageError("--periods must be at least 1");
  if (config.epsilon < 0) throw UsageError("--epsilon must be nonnegative");
  try {
    return {parse_example(config.example), config.epsilon, config.periods};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  DelayProblem problem = config.example.empty()
                             ? input_problem(config)
                             : build_example_problem(example_spec(config));
  const double horizon = config.example.empty()
                             ? horizon_or(config, problem.start + 50.0)
                             : horizon_or(config, example_horizon(example_spec(config)));
  const Trajectory traj =
      call("integrate", [&] { return integrate(problem, horizon, config.step); });
  std::unique_ptr<PsiCache> cache = open_cache(config);
  ClassifyOptions options;
  if (!(config.growth_factor > 1.0)) throw UsageError("--growth-factor must exceed 1");
  options.growth_factor = config.growth_factor;
  options.threshold = [&](double tau_m) {
    return cached_psi(cache, config, 1.0, tau_m) + theta(tau_m);
  };
  const Classification c = call("classify", [&] { return classify(problem, traj, options); });
  if (cache) cache->flush();
  emit(config, classification_json(problem, c, horizon).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  if (config.sign != 1 && config.sign != -1) throw UsageError("--sign must be + or -");
  const auto [first, last] = parse_branches(config.branches);
  const std::vector<CharRoot> roots =
      call("char_roots", [&] { return char_roots(config.delay, config.sign, first, last); });
  std::string text = "branch,re,im,residual,semicycle\n";
  for (const CharRoot& r : roots) {
    const double sc = r.lambda.imag() != 0.0 ? eigen_semicycle(r) : std::nan("");
    text += fmt::format("{},{},{},{},{}\n", r.branch, num(r.lambda.real()),
                        num(r.lambda.imag()), num(r.residual), num(sc));
  }
  emit(config, text, out);
  return kExitOk;
}

int cmd_repro(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.sample > 0)) throw UsageError("--sample must be positive");
  const ExampleSpec spec = example_spec(config);
  const DelayProblem problem = build_example_problem(spec);
  const double horizon = example_horizon(spec);
  const Trajectory traj =
      call("integrate", [&] { return integrate(problem, horizon, config.step); });
  std::string text = "t,closed_form,integrated,error\n";
  Series exact{"closed form", {}};
  Series numeric{"integrated", {}};
  double worst = 0.0;
  const auto n = static_cast<long>(std::floor(horizon / config.sample + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double t = std::min(static_cast<double>(i) * config.sample, horizon);
    const double cf = closed_form(spec, t);
    const double xi = traj.x(t);
    const double e = std::abs(xi - cf);
    worst = std::max(worst, e);
    text += fmt::format("{},{},{},{}\n", num(t), num(cf), num(xi), num(e));
    exact.points.emplace_back(t, cf);
    numeric.points.emplace_back(t, xi);
  }
  emit(config, text, out);
  emit_svg(config, {exact, numeric}, to_string(spec.which));
  err << fmt::format("max_error {}\n", num(worst));
  return kExitOk;
}

int cmd_harness(const RunConfig& config, std::ostream& out) {
  if (config.instances < 1) throw UsageError("--instances must be at least 1");
  const auto count = static_cast<std::size_t>(config.instances);
  std::vector<std::string> rows(count);
  std::string header;
  std::function<void(std::size_t)> job;
  if (config.kind == "margins") {
    header =
        "instance,semicycle,descent_applicable,descent_margin,ascent_applicable,"
        "ascent_margin\n";
    const double horizon = horizon_or(config, 30.0);
    job = [&, horizon](std::size_t i) {
      std::mt19937_64 rng = instance_rng(config.seed, i);
      const DelayProblem problem = random_normalized_problem(rng, horizon);
      const auto records =
          call("margin_checks", [&] { return margin_checks(problem, horizon, config.step); });
      for (const MarginRecord& r : records) {
        rows[i] += fmt::format("{},{},{},{},{},{}\n", i, r.semicycle,
                               static_cast<int>(r.descent.applicable), num(r.descent.margin),
                               static_cast<int>(r.ascent.applicable), num(r.ascent.margin));
      }
    };
  } else if (config.kind == "comparison") {
    header = "instance,applicable,ok,worst_violation\n";
    const double horizon = horizon_or(config, 10.0);
    job = [&, horizon](std::size_t i) {
      std::mt19937_64 rng = instance_rng(config.seed, i);
      const ComparisonPair pair = random_comparison_pair(rng, horizon);
      const ComparisonResult r = call("verify_comparison", [&] {
        return verify_comparison(pair.minorant, pair.majorant, horizon, config.step);
      });
      rows[i] = fmt::format("{},{},{},{}\n", i, static_cast<int>(r.applicable),
                            static_cast<int>(r.ok), num(r.worst_violation));
    };
  } else if (config.kind == "wronskian") {
    header = "instance,normalized_delay,min_sign,final_log_abs\n";
    const double horizon = horizon_or(config, 50.0);
    job = [&, horizon](std::size_t i) {
      std::mt19937_64 rng = instance_rng(config.seed, i);
      const DelayProblem problem = random_negative_problem(rng, horizon);
      const auto profile = call("wronskian_profile", [&] {
        return wronskian_profile(problem.p, problem.tau, 0.0, horizon, config.step);
      });
      int min_sign = 1;
      for (std::size_t k = 1; k < profile.size(); ++k) {
        min_sign = std::min(min_sign, profile[k].sign);
      }
      rows[i] = fmt::format("{},{},{},{}\n", i, num(criterion_wronskian_2e(problem).value),
                            min_sign, num(profile.back().log_abs));
    };
  } else if (config.kind == "arches") {
    header = "instance,block,ratio,tau_m,blocks,envelope_ratio,max_length,threshold\n";
    job = [&](std::size_t i) {
      std::mt19937_64 rng = instance_rng(config.seed, i);
      const ArchConstruction a = call("build_contracting_arches", [&] {
        return random_arches(rng);
      });
      const Trajectory traj = call("integrate", [&] {
        return integrate(a.problem, a.horizon(), config.step);
      });
      const auto zeros = find_zeros(traj);
      const double k = 1.0 / std::sqrt(std::max(std::abs(a.p_rise), std::abs(a.p_fall)));
      const EnvelopeFit fit =
          call("envelope_ratio", [&] { return envelope_ratio(traj, zeros, a.tau_m, k); });
      double longest = 0.0;
      for (const Semicycle& s : semicycles(traj, zeros)) {
        longest = std::max(longest, s.length() / k);
      }
      rows[i] = fmt::format("{},{},{},{},{},{},{},{}\n", i, num(a.block()), num(a.ratio),
                            num(a.tau_m), a.blocks, num(fit.ratio), num(longest),
                            num(semicycle_threshold(a.tau_m / k)));
    };
  } else {
    throw UsageError("--kind must be margins, comparison, wronskian or arches");
  }
  parallel_for(count, config.jobs, job);
  std::string text = header;
  for (const std::string& r : rows) text += r;
  emit(config, text, out);
  return kExitOk;
}

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kThresholds: return "thresholds";
    case Subcommand::kTable: return "table";
    case Subcommand::kSimulate: return "simulate";
    case Subcommand::kClassify: return "classify";
    case Subcommand::kSpectrum: return "spectrum";
    case Subcommand::kRepro: return "repro";
    case Subcommand::kHarness: return "harness";
  }
  return "?";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const char* name = subcommand_name(config.subcommand);
  try {
    if (!(config.step > 0)) throw UsageError("--step must be positive");
    if (config.horizon < 0) throw UsageError("--horizon must be positive");
    if (config.grid < 64) throw UsageError("--grid must be at least 64");
    if (!(config.tol > 0)) throw UsageError("--tol must be positive");
    if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
    switch (config.subcommand) {
      case Subcommand::kThresholds: return cmd_thresholds(config, out);
      case Subcommand::kTable: return cmd_table(config, out);
      case Subcommand::kSimulate: return cmd_simulate(config, out);
      case Subcommand::kClassify: return cmd_classify(config, out);
      case Subcommand::kSpectrum: return cmd_spectrum(config, out);
      case Subcommand::kRepro: return cmd_repro(config, out, err);
      case Subcommand::kHarness: return cmd_harness(config, out);
    }
  } catch (const ParseError& e) {
    err << "semicycle " << name << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "semicycle " << name << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const OperationError& e) {
    err << "semicycle " << name << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "semicycle " << name << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "semicycle " << name << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"Semicycle thresholds and delay-equation oscillation tools", "semicycle"};
  app.require_subcommand(1);
  RunConfig config;
  std::string sign = "+";
  std::string input;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", config.output_path, "Output file (default stdout)");
    sub->add_option("--jobs,-j", config.jobs, "Worker threads")->capture_default_str();
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--step", config.step, "Integration step")->capture_default_str();
    sub->add_option("--horizon", config.horizon, "Integration horizon");
  };
  auto iteration = [&](CLI::App* sub) {
    sub->add_option("--grid", config.grid, "Grid size of the Psi iteration")
        ->capture_default_str();
    sub->add_option("--tol", config.tol, "Iteration tolerance")->capture_default_str();
    sub->add_flag("!--no-cache", config.use_cache, "Do not read or write the Psi cache");
  };

  CLI::App* thresholds = app.add_subcommand("thresholds", "theta, Psi and the semicycle bound");
  common(thresholds);
  iteration(thresholds);
  thresholds->add_option("--delta", config.delta_range, "lo:hi:step or list")
      ->capture_default_str();
  thresholds->add_option("--rho", config.rho, "History ratio")->capture_default_str();
  thresholds->add_option("--svg", config.svg_path, "Plot file");

  CLI::App* table = app.add_subcommand("table", "Psi over a (rho, delta) grid");
  common(table);
  iteration(table);
  table->add_option("--delta", config.delta_range, "lo:hi:step or list")
      ->capture_default_str();
  table->add_option("--rho", config.rho_range, "lo:hi:step or list")->capture_default_str();

  CLI::App* simulate = app.add_subcommand("simulate", "Integrate a problem file");
  common(simulate);
  numeric(simulate);
  simulate->add_option("--input,-i", input, "Problem JSON")->required();
  simulate->add_option("--svg", config.svg_path, "Plot file");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a solution");
  common(classify_cmd);
  numeric(classify_cmd);
  iteration(classify_cmd);
  auto* classify_input = classify_cmd->add_option("--input,-i", input, "Problem JSON");
  auto* classify_example = classify_cmd->add_option(
      "--example", config.example, "Built-in example instead of a file");
  classify_input->excludes(classify_example);
  classify_cmd->add_option("--epsilon", config.epsilon, "Example parameter");
  classify_cmd->add_option("--periods", config.periods, "Example semicycles");
  classify_cmd->add_option("--growth-factor", config.growth_factor,
                           "Peak growth that counts as unbounded")
      ->capture_default_str();

  CLI::App* spectrum = app.add_subcommand("spectrum", "Characteristic roots");
  common(spectrum);
  spectrum->add_option("--delay", config.delay, "Constant delay c")->capture_default_str();
  spectrum->add_option("--sign", sign, "+ for x(t-c), - for -x(t-c)")->capture_default_str();
  spectrum->add_option("--branches", config.branches, "n or a..b")->capture_default_str();

  CLI::App* repro = app.add_subcommand("repro", "Closed-form examples against the integrator");
  common(repro);
  repro->add_option("example", config.example, "example2, example3 or sin")->required();
  repro->add_option("--epsilon", config.epsilon, "Example parameter")->capture_default_str();
  repro->add_option("--periods", config.periods, "Semicycles")->capture_default_str();
  repro->add_option("--step", config.step, "Integration step")->capture_default_str();
  repro->add_option("--sample", config.sample, "Output spacing")->capture_default_str();
  repro->add_option("--svg", config.svg_path, "Plot file");

  CLI::App* harness = app.add_subcommand("harness", "Seeded randomized checks");
  common(harness);
  numeric(harness);
  harness->add_option("--seed", config.seed, "Seed")->capture_default_str();
  harness->add_option("--instances", config.instances, "Instances")->capture_default_str();
  harness->add_option("--kind", config.kind, "margins, comparison, wronskian or arches")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "semicycle: " << e.what() << "\n";
    return kExitParse;
  }

  const std::pair<CLI::App*, Subcommand> map[] = {
      {thresholds, Subcommand::kThresholds}, {table, Subcommand::kTable},
      {simulate, Subcommand::kSimulate},     {classify_cmd, Subcommand::kClassify},
      {spectrum, Subcommand::kSpectrum},     {repro, Subcommand::kRepro},
      {harness, Subcommand::kHarness}};
  for (const auto& [sub, which] : map) {
    if (sub->parsed()) config.subcommand = which;
  }
  if (!input.empty()) config.input_path = input;
  if (sign == "+") {
    config.sign = 1;
  } else if (sign == "-") {
    config.sign = -1;
  } else {
    err << "semicycle spectrum: --sign must be + or -\n";
    return kExitParse;
  }
  if (config.subcommand == Subcommand::kClassify && config.example.empty() &&
      !config.input_path) {
    err << "semicycle classify: one of --input or --example is required\n";
    return kExitParse;
  }
  return run(config, out, err);
}

}  // namespace semicycle::cli
