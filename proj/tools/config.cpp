#include "config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subgrad/errors.hpp"
#include "subgrad/svm.hpp"
#include "subgrad/zoo.hpp"

namespace subgrad::cli {

namespace {

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::exception();
    return v;
  } catch (...) {
    throw ConfigError("parameter '" + key + "' has non-numeric value '" +
                      value + "'");
  }
}

}  // namespace

double Spec::number(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ConfigError("spec '" + kind + "' is missing parameter '" + key +
                      "'");
  }
  return parse_number(key, it->second);
}

double Spec::number_or(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_number(key, it->second);
}

std::uint64_t Spec::integer_or(const std::string& key,
                               std::uint64_t fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  return static_cast<std::uint64_t>(parse_number(key, it->second));
}

std::string Spec::text_or(const std::string& key, std::string fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? std::move(fallback) : it->second;
}

std::string Spec::canonical() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key + "=" + value;
    sep = ',';
  }
  return out;
}

Spec parse_spec(const std::string& text) {
  Spec spec;
  const std::size_t colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (spec.kind.empty()) throw ConfigError("empty spec");
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t begin = 0;
  while (begin <= rest.size() && !rest.empty()) {
    const std::size_t comma = rest.find(',', begin);
    const std::string token =
        rest.substr(begin, comma == std::string::npos ? std::string::npos
                                                      : comma - begin);
    if (!token.empty()) {
      const std::size_t eq = token.find('=');
      if (eq == std::string::npos) {
        spec.params[token] = "1";
      } else {
        spec.params[token.substr(0, eq)] = token.substr(eq + 1);
      }
    }
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return spec;
}

bool RunConfig::stochastic() const {
  if (mode == "deterministic") return false;
  if (mode == "stochastic") return true;
  if (mode != "auto") {
    throw ConfigError("run mode must be auto, deterministic or stochastic");
  }
  return seeds > 1 || schedule.kind == "constant-stochastic";
}

namespace {

nlohmann::ordered_json spec_to_json(const Spec& spec) {
  nlohmann::ordered_json j;
  j["kind"] = spec.kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : spec.params) params[key] = value;
  j["params"] = params;
  return j;
}

Spec spec_from_json(const nlohmann::json& j, const char* section) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError(std::string("config section '") + section +
                      "' needs a 'kind'");
  }
  Spec spec;
  spec.kind = j.at("kind").get<std::string>();
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items()) {
      spec.params[key] = value.is_string()
                             ? value.get<std::string>()
                             : nlohmann::json(value).dump();
    }
  }
  return spec;
}

}  // namespace

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["problem"] = spec_to_json(problem);
  j["schedule"] = spec_to_json(schedule);
  nlohmann::ordered_json run;
  run["iters"] = iters;
  run["seed"] = seed;
  run["seeds"] = seeds;
  run["mode"] = mode;
  if (start) run["x0"] = *start;
  run["rule"] = rule;
  if (theorem) run["theorem"] = *theorem;
  if (certificate_path) run["certificate"] = *certificate_path;
  j["run"] = run;
  nlohmann::ordered_json output;
  output["trace_csv"] = trace_csv;
  output["summary"] = summary_path;
  j["output"] = output;
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig config;
  if (!j.contains("problem")) throw ConfigError("config: missing 'problem'");
  config.problem = spec_from_json(j.at("problem"), "problem");
  if (!j.contains("schedule")) throw ConfigError("config: missing 'schedule'");
  config.schedule = spec_from_json(j.at("schedule"), "schedule");
  if (j.contains("run")) {
    const auto& run = j.at("run");
    if (run.contains("iters")) config.iters = run.at("iters").get<std::int64_t>();
    if (run.contains("seed")) config.seed = run.at("seed").get<std::uint64_t>();
    if (run.contains("seeds")) config.seeds = run.at("seeds").get<std::uint64_t>();
    if (run.contains("mode")) config.mode = run.at("mode").get<std::string>();
    if (run.contains("x0")) {
      config.start = run.at("x0").get<std::vector<double>>();
    }
    if (run.contains("rule")) config.rule = run.at("rule").get<std::string>();
    if (run.contains("theorem")) {
      config.theorem = run.at("theorem").get<std::string>();
    }
    if (run.contains("certificate")) {
      config.certificate_path = run.at("certificate").get<std::string>();
    }
  }
  if (j.contains("output")) {
    const auto& output = j.at("output");
    if (output.contains("trace_csv")) {
      config.trace_csv = output.at("trace_csv").get<std::string>();
    }
    if (output.contains("summary")) {
      config.summary_path = output.at("summary").get<std::string>();
    }
  }
  return config;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

Problem build_problem(const Spec& spec) {
  const std::size_t d =
      static_cast<std::size_t>(spec.number_or("d", 2.0));
  if (spec.kind == "lipschitz") {
    return make_lipschitz_norm(d, spec.number_or("L", 1.0));
  }
  if (spec.kind == "holder") {
    return make_holder_power(d, spec.number_or("L", 1.0),
                             spec.number_or("v", 1.0));
  }
  if (spec.kind == "composite") {
    return make_additive_composite(d, spec.number_or("LPhi", 1.0),
                                   spec.number_or("v", 1.0),
                                   spec.number_or("Lh", 1.0));
  }
  if (spec.kind == "quadgrowth") {
    return make_quadratic_growth(d, spec.number_or("r", 1.0));
  }
  if (spec.kind == "svm") {
    const double lambda = spec.number_or("lambda", 0.1);
    if (spec.has("csv")) {
      return make_svm(load_svm_csv(spec.params.at("csv"), lambda));
    }
    const std::uint64_t seed = spec.integer_or("seed", 7);
    const std::size_t n = static_cast<std::size_t>(spec.number_or("n", 50.0));
    const std::size_t dim =
        static_cast<std::size_t>(spec.number_or("d", 5.0));
    return make_svm(make_synthetic_svm(n, dim, lambda, seed));
  }
  throw ConfigError("unknown problem kind '" + spec.kind + "'");
}

StepSchedule build_schedule(const Spec& spec, const Problem& problem,
                            const Vector& start, std::int64_t horizon) {
  const auto auto_r = [&]() -> double {
    if (spec.has("R")) return spec.number("R");
    if (problem.certificate) {
      return distance(start, problem.certificate->x_star);
    }
    throw ConfigError(
        "schedule: R not given and no certificate to derive it from");
  };
  if (spec.kind == "constant") {
    return StepSchedule::constant_deterministic(auto_r(), horizon);
  }
  if (spec.kind == "constant-stochastic") {
    double l0 = spec.number_or("L0", 0.0);
    if (l0 <= 0.0 && problem.second_moment) l0 = problem.second_moment->l0;
    double l1 = spec.number_or("L1", -1.0);
    if (l1 < 0.0) {
      l1 = problem.second_moment ? problem.second_moment->l1 : 0.0;
    }
    return StepSchedule::constant_stochastic(auto_r(), l0, horizon, l1);
  }
  if (spec.kind == "classic-sc") {
    double mu = spec.number_or("mu", 0.0);
    if (mu <= 0.0 && problem.strong_convexity_mu) {
      mu = *problem.strong_convexity_mu;
    }
    return StepSchedule::classic_strongly_convex(mu);
  }
  if (spec.kind == "extended-sc") {
    double mu = spec.number_or("mu", 0.0);
    if (mu <= 0.0 && problem.strong_convexity_mu) {
      mu = *problem.strong_convexity_mu;
    }
    double l1 = spec.number_or("L1", -1.0);
    if (l1 < 0.0) {
      l1 = problem.second_moment ? problem.second_moment->l1 : 0.0;
    }
    return StepSchedule::extended_strongly_convex(mu, l1);
  }
  if (spec.kind == "quadgrowth") {
    double mu = spec.number_or("mu", 0.0);
    if (mu <= 0.0 && problem.quadratic_growth_mu) {
      mu = *problem.quadratic_growth_mu;
    }
    double l1 = spec.number_or("L1", -1.0);
    if (l1 < 0.0) {
      l1 = problem.second_moment ? problem.second_moment->l1 : 0.0;
    }
    return StepSchedule::quadratic_growth(mu, l1);
  }
  if (spec.kind == "svm") {
    double lambda = spec.number_or("lambda", 0.0);
    if (lambda <= 0.0 && problem.strong_convexity_mu) {
      lambda = *problem.strong_convexity_mu;
    }
    return StepSchedule::quad_regularized_svm(lambda);
  }
  if (spec.kind == "user") {
    const std::string text = spec.text_or("alphas", "");
    if (text.empty()) throw ConfigError("user schedule: missing alphas");
    std::vector<double> alphas;
    std::size_t begin = 0;
    while (begin <= text.size()) {
      const std::size_t sep = text.find(';', begin);
      const std::string token =
          text.substr(begin, sep == std::string::npos ? std::string::npos
                                                      : sep - begin);
      alphas.push_back(parse_number("alphas", token));
      if (sep == std::string::npos) break;
      begin = sep + 1;
    }
    return StepSchedule::user_sequence(std::move(alphas));
  }
  throw ConfigError("unknown schedule kind '" + spec.kind + "'");
}

AveragingRule build_rule(const std::string& name, const Problem& problem) {
  const double l1 = problem.second_moment ? problem.second_moment->l1 : 0.0;
  if (name == "best-iterate") return {AverageKind::best_iterate, 0.0};
  if (name == "uniform") return {AverageKind::uniform, 0.0};
  if (name == "alpha") return {AverageKind::alpha_weighted, 0.0};
  if (name == "alpha-2ml1a") return {AverageKind::alpha_two_minus_weighted, l1};
  if (name == "k+1") return {AverageKind::linear_weighted, 0.0};
  if (name == "k+1-2ml1a") return {AverageKind::linear_two_minus_weighted, l1};
  if (name == "k+1-1ml1a") return {AverageKind::linear_one_minus_weighted, l1};
  throw ConfigError("unknown averaging rule '" + name + "'");
}

std::string certificate_to_json(const OptimumCertificate& cert) {
  nlohmann::ordered_json j;
  j["x_star"] = cert.x_star;
  j["f_star"] = cert.f_star;
  j["method"] = cert.method;
  j["residual"] = cert.residual;
  j["low_confidence"] = cert.low_confidence;
  if (cert.seed) j["seed"] = *cert.seed;
  return j.dump(2);
}

OptimumCertificate certificate_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open certificate file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("certificate is not valid JSON: ") +
                      e.what());
  }
  OptimumCertificate cert;
  cert.x_star = j.at("x_star").get<std::vector<double>>();
  cert.f_star = j.at("f_star").get<double>();
  cert.method = j.value("method", std::string("file"));
  cert.residual = j.value("residual", 0.0);
  cert.low_confidence = j.value("low_confidence", false);
  if (j.contains("seed")) cert.seed = j.at("seed").get<std::uint64_t>();
  return cert;
}

}  // namespace subgrad::cli
