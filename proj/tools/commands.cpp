#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subgrad/certify.hpp"
#include "subgrad/checks.hpp"
#include "subgrad/errors.hpp"
#include "subgrad/report.hpp"
#include "subgrad/solver.hpp"
#include "subgrad/suites.hpp"

namespace subgrad::cli {

namespace {

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Make sure a usable certificate is in place: explicit file first, then the
// problem's own, then a long-run certification.
void ensure_certificate(Problem& problem, const RunConfig& config) {
  if (config.certificate_path) {
    OptimumCertificate cert =
        certificate_from_json_file(*config.certificate_path);
    if (cert.x_star.size() != problem.dimension) {
      throw ConfigError("certificate dimension does not match the problem");
    }
    const double value = problem.objective(cert.x_star);
    if (std::fabs(value - cert.f_star) >
        1e-12 * std::max(1.0, std::fabs(cert.f_star))) {
      throw ConfigError(
          "certificate rejected: objective at x_star does not match f_star");
    }
    problem.certificate = std::move(cert);
    return;
  }
  if (problem.certificate) return;
  OptimumCertificate cert =
      certify_optimum(problem, CertifyMethod::long_run, 200000);
  if (cert.low_confidence) {
    throw ConfigError(
        "derived optimum certificate is low-confidence (residual=" +
        std::to_string(cert.residual) +
        "); certify explicitly and pass --certificate");
  }
  std::cerr << "note: derived optimum certificate (method=" << cert.method
            << ", residual=" << cert.residual << ")\n";
  problem.certificate = std::move(cert);
}

double objective_gap_at(const Problem& problem, const Vector& point) {
  return problem.objective(point) - problem.certificate->f_star;
}

nlohmann::ordered_json bound_section(const Problem& problem,
                                     const StepSchedule& schedule,
                                     const RunConfig& config,
                                     const Vector& start,
                                     const RunTrace* trace) {
  nlohmann::ordered_json section;
  const TheoremId theorem = theorem_from_string(*config.theorem);
  double bound = 0.0;
  switch (theorem) {
    case TheoremId::T2:
    case TheoremId::C2:
    case TheoremId::C3:
    case TheoremId::C4: {
      if (trace == nullptr) {
        throw ConfigError(
            "deterministic theorem bounds need a single deterministic run");
      }
      const CheckRecord record = check_deterministic_rate(
          problem, *trace, theorem, schedule.steps(config.iters));
      bound = record.rhs;
      section["satisfied"] = record.pass;
      break;
    }
    default:
      bound = stochastic_bound(problem, schedule, theorem, config.iters, start);
      break;
  }
  section["theorem"] = *config.theorem;
  section["value"] = bound;
  return section;
}

}  // namespace

void write_trace_csv(const std::string& path, const RunTrace& trace,
                     bool stochastic) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw Error("cannot open trace path '" + path + "'");
  out << "k,alpha_k,f_gap," << (stochastic ? "xi_index" : "hyperplane_dist")
      << "\n";
  const std::size_t rows =
      trace.objective_gaps.empty() ? trace.objective_values.size()
                                   : trace.objective_gaps.size();
  for (std::size_t k = 0; k < rows; ++k) {
    out << k << ',';
    if (k < trace.step_sizes.size()) out << full_precision(trace.step_sizes[k]);
    out << ',';
    if (k < trace.objective_gaps.size()) {
      out << full_precision(trace.objective_gaps[k]);
    }
    out << ',';
    if (stochastic) {
      if (k < trace.xi_indices.size()) out << trace.xi_indices[k];
    } else {
      if (k < trace.hyperplane_distances.size()) {
        out << full_precision(trace.hyperplane_distances[k]);
      }
    }
    out << '\n';
  }
}

int cmd_run(const RunConfig& config) {
  Problem problem = build_problem(config.problem);
  ensure_certificate(problem, config);

  Vector start = config.start ? *config.start : zeros(problem.dimension);
  if (start.size() != problem.dimension) {
    throw ConfigError("run: x0 dimension does not match the problem");
  }
  start = problem.region.project(start);

  const StepSchedule schedule =
      build_schedule(config.schedule, problem, start, config.iters);
  const AveragingRule rule = build_rule(config.rule, problem);

  RunOptions options;
  options.start = start;

  nlohmann::ordered_json summary;
  summary["problem"] = problem.name;
  summary["schedule"] = schedule.describe();
  summary["iters"] = config.iters;
  summary["mode"] = config.stochastic() ? "stochastic" : "deterministic";

  if (!config.stochastic()) {
    const RunTrace trace =
        run_deterministic(problem, schedule, config.iters, options);
    write_trace_csv(config.trace_csv, trace, false);
    if (trace.terminated_at_minimizer) {
      summary["terminated_at_minimizer"] = *trace.terminated_at_minimizer;
    }
    summary["best_gap"] = trace.min_gap();
    const Vector average = weighted_average(trace, rule);
    summary["average_gap"] = {{"rule", config.rule},
                              {"value", objective_gap_at(problem, average)}};
    if (config.theorem) {
      summary["bound"] =
          bound_section(problem, schedule, config, start, &trace);
    }
  } else if (config.seeds <= 1) {
    const RunTrace trace =
        run_stochastic(problem, schedule, config.iters, config.seed, options);
    write_trace_csv(config.trace_csv, trace, true);
    summary["seed"] = config.seed;
    summary["best_gap"] = trace.min_gap();
    const Vector average = weighted_average(trace, rule);
    summary["average_gap"] = {{"rule", config.rule},
                              {"value", objective_gap_at(problem, average)}};
    if (config.theorem) {
      summary["bound"] =
          bound_section(problem, schedule, config, start, nullptr);
    }
  } else {
    const EnsembleResult ensemble =
        ensemble_expectation(problem, schedule, config.iters, rule,
                             static_cast<std::size_t>(config.seeds),
                             config.seed, options);
    // One representative trace for inspection.
    const RunTrace trace =
        run_stochastic(problem, schedule, config.iters, config.seed, options);
    write_trace_csv(config.trace_csv, trace, true);
    summary["seeds"] = config.seeds;
    summary["base_seed"] = config.seed;
    summary["rule"] = config.rule;
    summary["mean_gap"] = ensemble.mean_gap;
    summary["standard_error"] = ensemble.standard_error;
    if (config.theorem) {
      nlohmann::ordered_json bound =
          bound_section(problem, schedule, config, start, nullptr);
      bound["satisfied"] =
          ensemble.mean_gap <=
          bound["value"].get<double>() + 3.0 * ensemble.standard_error;
      summary["bound"] = bound;
    }
  }

  std::ofstream out(config.summary_path, std::ios::binary);
  if (!out) throw Error("cannot open summary path '" + config.summary_path +
                        "'");
  out << summary.dump(2) << "\n";
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_dump_config(const RunConfig& config) {
  std::cout << config.to_json() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& report_path,
               std::uint64_t seed) {
  std::vector<CheckGroup> groups;
  if (suite == "exact" || suite == "all") {
    auto exact = exact_suite(seed);
    groups.insert(groups.end(), exact.begin(), exact.end());
  }
  if (suite == "statistical" || suite == "all") {
    auto statistical = statistical_suite(seed);
    groups.insert(groups.end(), statistical.begin(), statistical.end());
  }
  if (groups.empty()) {
    throw ConfigError("verify: suite must be exact, statistical or all");
  }

  bool all_pass = true;
  for (const auto& group : groups) {
    std::size_t passed = 0;
    for (const auto& record : group.records) passed += record.pass ? 1 : 0;
    std::printf("%-42s %s (%zu/%zu checks, %.2fs)\n", group.name.c_str(),
                group.pass() ? "PASS" : "FAIL", passed, group.records.size(),
                group.seconds);
    for (const auto& record : group.records) {
      if (!record.pass) {
        std::printf("  FAILED %s\n", record_to_json(record).c_str());
        all_pass = false;
      }
    }
  }
  write_report_jsonl(report_path, groups);
  std::printf("report written to %s\n", report_path.c_str());
  return all_pass ? kExitOk : kExitVerificationFailure;
}

int cmd_certify(const std::string& problem_spec, const std::string& method,
                std::uint64_t budget, const std::string& out_path,
                std::uint64_t seed, double residual_target) {
  const Problem problem = build_problem(parse_spec(problem_spec));
  CertifyMethod certify_method;
  if (method == "bisection-1d") {
    certify_method = CertifyMethod::bisection_1d;
  } else if (method == "long-run") {
    certify_method = CertifyMethod::long_run;
  } else {
    throw ConfigError("unknown certify method '" + method + "'");
  }
  CertifyOptions options;
  options.seed = seed;
  options.residual_target = residual_target;
  const OptimumCertificate cert =
      certify_optimum(problem, certify_method, budget, options);
  const std::string json = certificate_to_json(cert);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open certificate path '" + out_path + "'");
    out << json << "\n";
  }
  std::cout << json << "\n";
  return kExitOk;
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "subgrad: projected subgradient methods with growth-model rate "
      "verification"};
  app.require_subcommand(1);

  // run / dump-config share their option set.
  RunConfig config;
  std::string config_path, problem_spec, schedule_spec, x0_text;
  struct RunFlags {
    CLI::App* cmd = nullptr;
  } run_cmd, dump_cmd;

  const auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config document");
    cmd->add_option("--problem", problem_spec,
                    "problem spec, e.g. holder:v=1,L=1,d=2");
    cmd->add_option("--schedule", schedule_spec,
                    "schedule spec, e.g. constant:R=1");
    cmd->add_option("--iters", config.iters, "iteration horizon T");
    cmd->add_option("--seed", config.seed, "base RNG seed");
    cmd->add_option("--seeds", config.seeds, "ensemble size M");
    cmd->add_option("--mode", config.mode,
                    "auto | deterministic | stochastic");
    cmd->add_option("--x0", x0_text, "starting point, comma separated");
    cmd->add_option("--rule", config.rule,
                    "averaging rule (best-iterate, uniform, alpha, "
                    "alpha-2ml1a, k+1, k+1-2ml1a, k+1-1ml1a)");
    cmd->add_option("--theorem", config.theorem,
                    "bound to report (T2,C2,C3,C4,T3,T4,T5,T6,T6-simple,"
                    "C5,QG)");
    cmd->add_option("--certificate", config.certificate_path,
                    "optimum certificate JSON file");
    cmd->add_option("--trace", config.trace_csv, "trace CSV output path");
    cmd->add_option("--summary", config.summary_path,
                    "summary JSON output path");
  };
  run_cmd.cmd = app.add_subcommand("run", "run a single or ensemble experiment");
  add_run_options(run_cmd.cmd);
  dump_cmd.cmd =
      app.add_subcommand("dump-config", "print the resolved run config");
  add_run_options(dump_cmd.cmd);

  std::string suite = "all";
  std::string report_path = "verify_report.jsonl";
  std::uint64_t verify_seed = 1;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "exact | statistical | all");
  verify_cmd->add_option("--report", report_path, "JSONL report path");
  verify_cmd->add_option("--seed", verify_seed, "suite base seed");

  std::string certify_problem, certify_method_name = "long-run";
  std::string certificate_out = "certificate.json";
  std::uint64_t certify_budget = 200000, certify_seed = 0x5eed;
  double residual_target = 1e-9;
  auto* certify_cmd =
      app.add_subcommand("certify", "produce an optimum certificate");
  certify_cmd->add_option("--problem", certify_problem, "problem spec")
      ->required();
  certify_cmd->add_option("--method", certify_method_name,
                          "bisection-1d | long-run");
  certify_cmd->add_option("--budget", certify_budget, "iteration budget");
  certify_cmd->add_option("--out", certificate_out, "certificate JSON path");
  certify_cmd->add_option("--seed", certify_seed, "run seed");
  certify_cmd->add_option("--target", residual_target, "residual target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run_cmd.cmd->parsed() || dump_cmd.cmd->parsed()) {
      CLI::App* cmd = run_cmd.cmd->parsed() ? run_cmd.cmd : dump_cmd.cmd;
      if (!config_path.empty()) {
        RunConfig file_config = RunConfig::from_json_file(config_path);
        // Flags given on the command line override document fields.
        if (cmd->count("--iters") == 0) config.iters = file_config.iters;
        if (cmd->count("--seed") == 0) config.seed = file_config.seed;
        if (cmd->count("--seeds") == 0) config.seeds = file_config.seeds;
        if (cmd->count("--mode") == 0) config.mode = file_config.mode;
        if (cmd->count("--rule") == 0) config.rule = file_config.rule;
        if (cmd->count("--theorem") == 0) config.theorem = file_config.theorem;
        if (cmd->count("--certificate") == 0) {
          config.certificate_path = file_config.certificate_path;
        }
        if (cmd->count("--trace") == 0) config.trace_csv = file_config.trace_csv;
        if (cmd->count("--summary") == 0) {
          config.summary_path = file_config.summary_path;
        }
        if (problem_spec.empty()) config.problem = file_config.problem;
        if (schedule_spec.empty()) config.schedule = file_config.schedule;
        if (x0_text.empty()) config.start = file_config.start;
      }
      if (!problem_spec.empty()) config.problem = parse_spec(problem_spec);
      if (!schedule_spec.empty()) config.schedule = parse_spec(schedule_spec);
      if (config.problem.kind.empty()) {
        throw ConfigError("missing --problem (or config document)");
      }
      if (config.schedule.kind.empty()) {
        throw ConfigError("missing --schedule (or config document)");
      }
      if (!x0_text.empty()) {
        std::vector<double> x0;
        std::size_t begin = 0;
        while (begin <= x0_text.size()) {
          const std::size_t comma = x0_text.find(',', begin);
          const std::string token = x0_text.substr(
              begin,
              comma == std::string::npos ? std::string::npos : comma - begin);
          try {
            std::size_t used = 0;
            x0.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::exception();
          } catch (...) {
            throw ConfigError("--x0: '" + token + "' is not a number");
          }
          if (comma == std::string::npos) break;
          begin = comma + 1;
        }
        config.start = std::move(x0);
      }
      return run_cmd.cmd->parsed() ? cmd_run(config) : cmd_dump_config(config);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(suite, report_path, verify_seed);
    }
    if (certify_cmd->parsed()) {
      return cmd_certify(certify_problem, certify_method_name, certify_budget,
                         certificate_out, certify_seed, residual_target);
    }
    throw ConfigError("no subcommand given");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InvalidInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace subgrad::cli
