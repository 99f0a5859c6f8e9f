#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "subgrad/errors.hpp"
#include "subgrad/solver.hpp"

using namespace subgrad;
using namespace subgrad::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("spec strings parse into kind and parameters") {
  const Spec spec = parse_spec("holder:v=1,L=1,d=2");
  CHECK(spec.kind == "holder");
  CHECK(spec.number("v") == 1.0);
  CHECK(spec.number("L") == 1.0);
  CHECK(spec.number("d") == 2.0);

  const Spec svm = parse_spec("svm:synthetic,seed=7");
  CHECK(svm.kind == "svm");
  CHECK(svm.has("synthetic"));
  CHECK(svm.integer_or("seed", 0) == 7);

  CHECK_THROWS_AS(parse_spec(":oops"), ConfigError);
  CHECK_THROWS_AS(parse_spec("holder:v=abc").number("v"), ConfigError);
}

TEST_CASE("unknown kinds are configuration errors") {
  CHECK_THROWS_WITH_AS(build_problem(parse_spec("mystery:d=2")),
                       doctest::Contains("unknown problem kind"), ConfigError);
  const Problem p = build_problem(parse_spec("holder:v=1,L=1,d=2"));
  CHECK_THROWS_WITH_AS(
      build_schedule(parse_spec("bogus:R=1"), p, zeros(2), 10),
      doctest::Contains("unknown schedule kind"), ConfigError);
}

TEST_CASE("schedule R auto-fills from the certificate") {
  const Problem p = build_problem(parse_spec("holder:v=1,L=1,d=2"));
  const Vector start{0.6, 0.8};
  const StepSchedule schedule =
      build_schedule(parse_spec("constant"), p, start, 3);
  CHECK(schedule.step(0) == 0.5);  // |x0 - 0| / sqrt(4)
}

TEST_CASE("config document round trip preserves every field") {
  RunConfig config;
  config.problem = parse_spec("svm:synthetic,seed=7,n=20,d=3,lambda=0.5");
  config.schedule = parse_spec("svm:lambda=0.5");
  config.iters = 250;
  config.seed = 99;
  config.seeds = 1;
  config.mode = "stochastic";
  config.start = Vector{0.1, 0.2, 0.3};
  config.rule = "k+1";
  config.theorem = "C5";
  config.trace_csv = "a.csv";
  config.summary_path = "b.json";

  const RunConfig reparsed = RunConfig::from_json(config.to_json());
  CHECK(reparsed.problem.canonical() == config.problem.canonical());
  CHECK(reparsed.schedule.canonical() == config.schedule.canonical());
  CHECK(reparsed.iters == config.iters);
  CHECK(reparsed.seed == config.seed);
  CHECK(reparsed.mode == config.mode);
  CHECK(reparsed.start == config.start);
  CHECK(reparsed.rule == config.rule);
  CHECK(reparsed.theorem == config.theorem);
  CHECK(reparsed.trace_csv == config.trace_csv);
  CHECK(reparsed.summary_path == config.summary_path);

  // Round-tripped configs drive bitwise-identical runs.
  const Problem problem = build_problem(config.problem);
  const Problem problem2 = build_problem(reparsed.problem);
  const auto schedule =
      build_schedule(config.schedule, problem, zeros(3), config.iters);
  const auto schedule2 =
      build_schedule(reparsed.schedule, problem2, zeros(3), reparsed.iters);
  RunOptions options;
  options.start = config.start;
  RunOptions options2;
  options2.start = reparsed.start;
  const RunTrace a =
      run_stochastic(problem, schedule, config.iters, config.seed, options);
  const RunTrace b = run_stochastic(problem2, schedule2, reparsed.iters,
                                    reparsed.seed, options2);
  REQUIRE(a.iterates.size() == b.iterates.size());
  for (std::size_t k = 0; k < a.iterates.size(); ++k) {
    CHECK(a.iterates[k] == b.iterates[k]);  // bitwise
  }
}

TEST_CASE("malformed config documents are reported") {
  CHECK_THROWS_AS(RunConfig::from_json("{not json"), ConfigError);
  CHECK_THROWS_WITH_AS(RunConfig::from_json("{}"),
                       doctest::Contains("problem"), ConfigError);
}

TEST_CASE("trace csv layout") {
  Problem problem = build_problem(parse_spec("holder:v=1,L=1,d=2"));
  const auto schedule = StepSchedule::constant_deterministic(1.0, 9);
  RunOptions options;
  options.start = Vector{0.6, 0.8};
  const RunTrace trace = run_deterministic(problem, schedule, 9, options);
  write_trace_csv("cli_trace_test.csv", trace, false);

  const std::string text = slurp("cli_trace_test.csv");
  CHECK(text.find("k,alpha_k,f_gap,hyperplane_dist\n") == 0);
  CHECK(text.find("\r") == std::string::npos);  // LF only
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  CHECK(lines == trace.objective_gaps.size() + 1);  // header + iterate rows

  // Full-precision rendering: the first step size reparses bitwise.
  const std::size_t pos = text.find('\n') + 1;
  const std::size_t comma = text.find(',', pos);
  const std::size_t comma2 = text.find(',', comma + 1);
  const double alpha = std::stod(text.substr(comma + 1, comma2 - comma - 1));
  CHECK(alpha == trace.step_sizes[0]);
  std::remove("cli_trace_test.csv");
}

TEST_CASE("averaging rule names resolve with the problem's L1") {
  const Problem svm = build_problem(parse_spec("svm:synthetic,seed=3,n=10,d=2"));
  const AveragingRule rule = build_rule("alpha-2ml1a", svm);
  CHECK(rule.kind == AverageKind::alpha_two_minus_weighted);
  CHECK(rule.l1 == svm.second_moment->l1);
  CHECK_THROWS_AS(build_rule("median", svm), ConfigError);
}

TEST_CASE("cli exit codes") {
  const char* unknown_schedule[] = {"subgrad", "run",
                                    "--problem", "holder:v=1,L=1,d=2",
                                    "--schedule", "bogus:R=1",
                                    "--iters", "5"};
  CHECK(cli_main(8, unknown_schedule) == kExitConfigError);

  const char* no_subcommand[] = {"subgrad"};
  CHECK(cli_main(1, no_subcommand) == kExitConfigError);

  const char* bad_x0[] = {"subgrad", "run",
                          "--problem", "holder:v=1,L=1,d=2",
                          "--schedule", "constant:R=1",
                          "--iters", "5",
                          "--x0", "1,oops"};
  CHECK(cli_main(10, bad_x0) == kExitConfigError);

  const char* dump[] = {"subgrad", "dump-config",
                        "--problem", "holder:v=1,L=1,d=2",
                        "--schedule", "constant:R=1",
                        "--iters", "7"};
  CHECK(cli_main(8, dump) == kExitOk);
}

TEST_CASE("certificate files round trip") {
  OptimumCertificate cert;
  cert.x_star = {1.0, -2.0};
  cert.f_star = 0.75;
  cert.method = "long-run";
  cert.residual = 1e-12;
  cert.seed = 42;
  std::ofstream("cli_cert_test.json") << certificate_to_json(cert);
  const OptimumCertificate loaded =
      certificate_from_json_file("cli_cert_test.json");
  CHECK(loaded.x_star == cert.x_star);
  CHECK(loaded.f_star == cert.f_star);
  CHECK(loaded.method == cert.method);
  CHECK(loaded.residual == cert.residual);
  CHECK(loaded.seed == cert.seed);
  std::remove("cli_cert_test.json");
}
