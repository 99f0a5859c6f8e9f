#ifndef SUBGRAD_TOOLS_CONFIG_HPP
#define SUBGRAD_TOOLS_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subgrad/certify.hpp"
#include "subgrad/problem.hpp"
#include "subgrad/schedule.hpp"
#include "subgrad/trace.hpp"

namespace subgrad::cli {

// "kind:key=val,key=val" compact spec, e.g. "holder:v=1,L=1,d=2" or
// "svm:synthetic,seed=7". Bare tokens become flags with value "1".
struct Spec {
  std::string kind;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) > 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::uint64_t integer_or(const std::string& key, std::uint64_t fallback) const;
  std::string text_or(const std::string& key, std::string fallback) const;

  std::string canonical() const;
};

Spec parse_spec(const std::string& text);

// Experiment configuration: one JSON document with problem / schedule / run /
// output sections. Command-line flags override document fields.
struct RunConfig {
  Spec problem;
  Spec schedule;

  std::int64_t iters = 100;
  std::uint64_t seed = 1;
  std::uint64_t seeds = 1;  // > 1 runs a seed ensemble
  std::string mode = "auto";  // auto | deterministic | stochastic
  std::optional<std::vector<double>> start;
  std::string rule = "best-iterate";
  std::optional<std::string> theorem;
  std::optional<std::string> certificate_path;

  std::string trace_csv = "trace.csv";
  std::string summary_path = "summary.json";

  bool stochastic() const;

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  static RunConfig from_json_file(const std::string& path);
};

// Problem construction from a spec. Known kinds: lipschitz, holder,
// composite, quadgrowth, svm.
Problem build_problem(const Spec& spec);

// Schedule construction; R for the constant kinds is auto-filled from the
// certificate when omitted. Known kinds: constant, constant-stochastic,
// classic-sc, extended-sc, quadgrowth, svm, user.
StepSchedule build_schedule(const Spec& spec, const Problem& problem,
                            const Vector& start, std::int64_t horizon);

AveragingRule build_rule(const std::string& name, const Problem& problem);

// Certificate JSON (x_star, f_star, method, residual, low_confidence, seed).
std::string certificate_to_json(const OptimumCertificate& cert);
OptimumCertificate certificate_from_json_file(const std::string& path);

}  // namespace subgrad::cli

#endif  // SUBGRAD_TOOLS_CONFIG_HPP
