#include "subgrad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "subgrad/errors.hpp"
#include "subgrad/kahan.hpp"
#include "subgrad/rng.hpp"

namespace subgrad {

std::string params_digest(const std::string& params) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : params) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

CheckRecord make_record(std::string check_id, std::string params, double lhs,
                        double rhs, bool pass, std::string note) {
  CheckRecord r;
  r.check_id = std::move(check_id);
  r.params_digest = params_digest(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

Lemma3Result check_lemma3_step(const Problem& problem, const Vector& x,
                               const Vector& y, double alpha) {
  if (!problem.stochastic_oracle || !problem.stochastic_oracle->finite_sum()) {
    throw UnsupportedError(
        "check_lemma3_step: exact enumeration needs a finite uniform oracle "
        "(Monte-Carlo checking is deliberately not offered)");
  }
  if (!(alpha > 0.0)) {
    throw InvalidInputError("check_lemma3_step: alpha must be positive");
  }
  const StochasticOracle& oracle = *problem.stochastic_oracle;

  const double lhs = exact_expectation(
      oracle, x, [&](const Vector& g) {
        const Vector moved = problem.region.project(step_from(x, g, alpha));
        const double dist = distance(moved, y);
        return dist * dist;
      });

  const Vector mean_g = exact_expected_estimate(oracle, x);
  const double second_moment = exact_expectation(
      oracle, x, [](const Vector& g) { return squared_norm(g); });
  const double dist_xy = distance(x, y);
  const double rhs = dist_xy * dist_xy -
                     2.0 * alpha * dot(mean_g, subtract(x, y)) +
                     alpha * alpha * second_moment;

  Lemma3Result result;
  result.lhs = lhs;
  result.rhs = rhs;
  result.pass = leq_rel(lhs, rhs);
  return result;
}

CheckRecord check_lemma3_along_trace(const Problem& problem,
                                     const RunTrace& trace) {
  const auto& cert = problem.require_certificate("check_lemma3_along_trace");
  if (!trace.iterates_stored) {
    throw ConfigError("check_lemma3_along_trace: trace iterates not stored");
  }
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0, worst_rhs = 0.0;
  bool all_pass = true;
  const std::size_t steps = trace.step_sizes.size();
  for (std::size_t k = 0; k < steps; ++k) {
    const Lemma3Result step = check_lemma3_step(
        problem, trace.iterates[k], cert.x_star, trace.step_sizes[k]);
    all_pass = all_pass && step.pass;
    const double margin = step.rhs - step.lhs;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_lhs = step.lhs;
      worst_rhs = step.rhs;
    }
  }
  std::ostringstream params;
  params << "lemma3-trace|" << problem.name << "|steps=" << steps
         << "|seed=" << (trace.seed ? *trace.seed : 0);
  return make_record("lemma3-per-step", params.str(), worst_lhs, worst_rhs,
                     all_pass,
                     "worst step of " + std::to_string(steps));
}

CheckRecord check_shor(const Problem& problem, const RunTrace& trace,
                       double distance_to_optimum,
                       std::span<const double> alphas) {
  problem.require_certificate("check_shor");
  std::ostringstream params;
  params << "shor|" << problem.name << "|T=" << trace.requested_horizon
         << "|R=" << distance_to_optimum;
  if (trace.terminated_at_minimizer) {
    std::ostringstream note;
    note << "terminated at minimizer (k=" << *trace.terminated_at_minimizer
         << ")";
    if (!trace.objective_gaps.empty()) {
      note << ", residual gap " << trace.objective_gaps.back();
    }
    return make_record("shor", params.str(), 0.0,
                       shor_rhs(distance_to_optimum, alphas), true,
                       note.str());
  }
  if (trace.hyperplane_distances.empty()) {
    throw ConfigError("check_shor: trace has no hyperplane distances");
  }
  const double min_distance =
      *std::min_element(trace.hyperplane_distances.begin(),
                        trace.hyperplane_distances.end());
  const double rhs = shor_rhs(distance_to_optimum, alphas);
  return make_record("shor", params.str(), min_distance, rhs,
                     leq_rel(min_distance, rhs));
}

namespace {

BoundParams deterministic_bound_params(const Problem& problem,
                                       const RunTrace& trace,
                                       TheoremId theorem,
                                       std::span<const double> alphas,
                                       double r) {
  const GrowthModel& growth = *problem.growth_model;
  BoundParams params;
  params.distance_to_optimum = r;
  params.horizon = trace.requested_horizon;
  params.alphas.assign(alphas.begin(), alphas.end());
  switch (theorem) {
    case TheoremId::T2:
      params.growth = &growth;
      break;
    case TheoremId::C2:
      if (growth.kind() != GrowthModel::Kind::power ||
          growth.exponent() != 1.0) {
        throw ConfigError("check_deterministic_rate: C2 needs the quadratic "
                          "growth model power(L, 1)");
      }
      params.lipschitz = growth.lipschitz();
      break;
    case TheoremId::C3:
      if (growth.kind() != GrowthModel::Kind::power) {
        throw ConfigError(
            "check_deterministic_rate: C3 needs a power growth model");
      }
      params.lipschitz = growth.lipschitz();
      params.holder_exponent = growth.exponent();
      break;
    case TheoremId::C4:
      if (growth.kind() != GrowthModel::Kind::composite) {
        throw ConfigError(
            "check_deterministic_rate: C4 needs a composite growth model");
      }
      params.smooth_part = growth.smooth_part();
      params.holder_exponent = growth.exponent();
      params.lipschitz_part = growth.lipschitz_part();
      break;
    default:
      throw ConfigError(
          "check_deterministic_rate: theorem must be one of T2/C2/C3/C4");
  }
  return params;
}

}  // namespace

CheckRecord check_deterministic_rate(const Problem& problem,
                                     const RunTrace& trace, TheoremId theorem,
                                     std::span<const double> alphas) {
  const auto& cert = problem.require_certificate("check_deterministic_rate");
  if (!problem.growth_model) {
    throw ConfigError("check_deterministic_rate: problem '" + problem.name +
                      "' declares no growth model");
  }
  Vector start = trace.iterates_stored && !trace.iterates.empty()
                     ? trace.iterates.front()
                     : Vector{};
  if (start.empty()) {
    throw ConfigError("check_deterministic_rate: trace must store iterates");
  }
  const double r = distance(start, cert.x_star);
  const BoundParams params =
      deterministic_bound_params(problem, trace, theorem, alphas, r);
  const double bound = theorem_rhs(theorem, params);
  const double min_gap = trace.min_gap();
  std::ostringstream key;
  key << "rate-" << to_string(theorem) << "|" << problem.name
      << "|T=" << trace.requested_horizon << "|R=" << r;
  return make_record(std::string("rate-") + to_string(theorem), key.str(),
                     min_gap, bound, leq_rel(min_gap, bound));
}

AveragingRule default_rule_for(TheoremId theorem, double l1) {
  switch (theorem) {
    case TheoremId::T3: return {AverageKind::alpha_weighted, 0.0};
    case TheoremId::T4: return {AverageKind::linear_weighted, 0.0};
    case TheoremId::T5: return {AverageKind::alpha_two_minus_weighted, l1};
    case TheoremId::T6: return {AverageKind::linear_two_minus_weighted, l1};
    case TheoremId::T6_simple: return {AverageKind::linear_weighted, 0.0};
    case TheoremId::C5: return {AverageKind::linear_weighted, 0.0};
    case TheoremId::QG: return {AverageKind::linear_one_minus_weighted, l1};
    default:
      throw ConfigError("default_rule_for: not an expectation-bound theorem");
  }
}

double stochastic_bound(const Problem& problem, const StepSchedule& schedule,
                        TheoremId theorem, std::int64_t horizon,
                        const Vector& start) {
  const auto& cert = problem.require_certificate("stochastic_bound");
  const double r = distance(start, cert.x_star);

  BoundParams params;
  params.horizon = horizon;
  params.distance_to_optimum = r;
  params.alphas = schedule.steps(horizon);

  switch (theorem) {
    case TheoremId::T3: {
      if (!problem.second_moment || problem.second_moment->l1 != 0.0) {
        throw ConfigError(
            "stochastic_bound: T3 requires a uniform second-moment model "
            "(L1 = 0)");
      }
      params.lipschitz = problem.second_moment->l0;
      break;
    }
    case TheoremId::T4: {
      if (!problem.strong_convexity_mu) {
        throw ConfigError("stochastic_bound: T4 requires strong_convexity_mu");
      }
      if (!problem.second_moment || problem.second_moment->l1 != 0.0) {
        throw ConfigError(
            "stochastic_bound: T4 requires a uniform second-moment model "
            "(L1 = 0)");
      }
      params.mu = *problem.strong_convexity_mu;
      params.lipschitz = problem.second_moment->l0;
      break;
    }
    case TheoremId::T5: {
      if (!problem.second_moment) {
        throw ConfigError(
            "stochastic_bound: T5 requires a second-moment model");
      }
      params.l0 = problem.second_moment->l0;
      params.l1 = problem.second_moment->l1;
      for (double a : params.alphas) {
        if (!(params.l1 * a < 2.0)) {
          throw ConfigError(
              "stochastic_bound: T5 requires L1 alpha_k < 2 for every step");
        }
      }
      break;
    }
    case TheoremId::T6:
    case TheoremId::T6_simple: {
      if (!problem.strong_convexity_mu) {
        throw ConfigError("stochastic_bound: T6 requires strong_convexity_mu");
      }
      if (!problem.second_moment) {
        throw ConfigError(
            "stochastic_bound: T6 requires a second-moment model");
      }
      params.mu = *problem.strong_convexity_mu;
      params.l0 = problem.second_moment->l0;
      params.l1 = problem.second_moment->l1;
      break;
    }
    case TheoremId::C5: {
      if (!problem.strong_convexity_mu) {
        throw ConfigError(
            "stochastic_bound: C5 requires strong_convexity_mu (= lambda)");
      }
      if (!problem.second_moment) {
        throw ConfigError(
            "stochastic_bound: C5 requires the (6L^2, 6 lambda) "
            "second-moment model");
      }
      params.lambda = *problem.strong_convexity_mu;
      // Second moment stores L0 = sqrt(6) L; the display wants plain L.
      params.lipschitz = problem.second_moment->l0 / std::sqrt(6.0);
      break;
    }
    case TheoremId::QG: {
      if (!problem.quadratic_growth_mu) {
        throw ConfigError(
            "stochastic_bound: QG requires quadratic_growth_mu");
      }
      if (!problem.second_moment) {
        throw ConfigError(
            "stochastic_bound: QG requires a second-moment model");
      }
      params.mu = *problem.quadratic_growth_mu;
      params.l0 = problem.second_moment->l0;
      params.l1 = problem.second_moment->l1;
      // QG measures distance to the minimizer set, not to one minimizer.
      params.distance_to_optimum = problem.distance_to_optimum_set(start);
      break;
    }
    default:
      throw ConfigError("stochastic_bound: theorem has no expectation bound");
  }
  return theorem_rhs(theorem, params);
}

StochasticRateResult check_stochastic_rate(const Problem& problem,
                                           const StepSchedule& schedule,
                                           const StochasticRateSpec& spec) {
  if (!problem.stochastic_oracle) {
    throw ConfigError("check_stochastic_rate: problem '" + problem.name +
                      "' has no stochastic oracle");
  }
  const Vector start = problem.region.project(
      spec.start ? *spec.start : zeros(problem.dimension));
  const double bound =
      stochastic_bound(problem, schedule, spec.theorem, spec.horizon, start);

  double rule_l1 = 0.0;
  if (spec.theorem == TheoremId::T5 || spec.theorem == TheoremId::T6 ||
      spec.theorem == TheoremId::QG) {
    rule_l1 = problem.second_moment->l1;
  }
  const AveragingRule rule =
      spec.rule ? *spec.rule : default_rule_for(spec.theorem, rule_l1);

  RunOptions options;
  options.start = start;
  const EnsembleResult ensemble =
      ensemble_expectation(problem, schedule, spec.horizon, rule,
                           spec.num_seeds, spec.base_seed, options);

  StochasticRateResult result;
  result.mean = ensemble.mean_gap;
  result.standard_error = ensemble.standard_error;
  result.bound = bound;
  result.pass =
      ensemble.mean_gap <= bound + 3.0 * ensemble.standard_error +
                               1e-9 * (1.0 + std::fabs(bound));

  std::ostringstream key;
  key << "stochastic-" << to_string(spec.theorem) << "|" << problem.name
      << "|" << schedule.describe() << "|T=" << spec.horizon
      << "|M=" << spec.num_seeds << "|seed0=" << spec.base_seed;
  std::ostringstream note;
  note << "mean=" << result.mean << " se=" << result.standard_error
       << " bound=" << bound << " rule=" << to_string(rule.kind);
  result.record = make_record(
      std::string("stochastic-") + to_string(spec.theorem), key.str(),
      result.mean, bound + 3.0 * result.standard_error, result.pass,
      note.str());
  return result;
}

namespace {

double prop1_infimum(const Problem& problem, std::span<const Vector> grid,
                     const Prop1Options& options, bool& approximate) {
  if (options.infimum) {
    approximate = false;
    return *options.infimum;
  }
  if (problem.certificate) {
    approximate = false;
    return problem.certificate->f_star;
  }
  approximate = true;
  double inf = std::numeric_limits<double>::infinity();
  for (const Vector& x : grid) inf = std::min(inf, problem.objective(x));
  return inf;
}

}  // namespace

CheckRecord check_prop1_forward(const Problem& problem,
                                std::span<const Vector> grid,
                                const Prop1Options& options) {
  bool approximate = false;
  const double inf = prop1_infimum(problem, grid, options, approximate);
  const double l0 = options.l0;
  const double l1 = options.l1;

  bool all_pass = true;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const Vector& x : grid) {
    const double fx = problem.objective(x);
    const double steepness = std::sqrt(l1 * (fx - inf) + l0 * l0);
    for (const Vector& y : grid) {
      const double dist = distance(y, x);
      const double fy = problem.objective(y);
      const double upper =
          fx + l1 / 4.0 * dist * dist + dist * steepness;
      const bool ok = leq_rel(fy, upper);
      all_pass = all_pass && ok;
      const double margin = upper - fy;
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_lhs = fy;
        worst_rhs = upper;
      }
    }
  }
  std::ostringstream key;
  key << "prop1-forward|" << problem.name << "|points=" << grid.size()
      << "|L0=" << l0 << "|L1=" << l1;
  return make_record("prop1-forward", key.str(), worst_lhs, worst_rhs,
                     all_pass, approximate ? "approximate-inf" : "");
}

CheckRecord check_prop1_reverse(const Problem& problem,
                                std::span<const Vector> grid,
                                const Prop1Options& options) {
  bool approximate = false;
  const double inf = prop1_infimum(problem, grid, options, approximate);
  const double l0 = options.l0;
  const double l1 = options.l1;

  bool all_pass = true;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const Vector& x : grid) {
    const double lhs = squared_norm(problem.oracle(x));
    const double rhs = l0 * l0 + l1 * (problem.objective(x) - inf);
    const bool ok = lhs <= rhs + 1e-9 * (1.0 + std::fabs(rhs));
    all_pass = all_pass && ok;
    const double margin = rhs - lhs;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  std::ostringstream key;
  key << "prop1-reverse|" << problem.name << "|points=" << grid.size()
      << "|L0=" << l0 << "|L1=" << l1;
  return make_record("prop1-reverse", key.str(), worst_lhs, worst_rhs,
                     all_pass, approximate ? "approximate-inf" : "");
}

std::vector<Vector> grid_1d(double lo, double hi, std::size_t points) {
  std::vector<Vector> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0
                                 : static_cast<double>(i) /
                                       static_cast<double>(points - 1);
    out.push_back({lo + t * (hi - lo)});
  }
  return out;
}

std::vector<Vector> feasible_cloud(const Problem& problem,
                                   std::size_t num_points, std::uint64_t seed,
                                   double box_half_width) {
  const Vector center = problem.certificate ? problem.certificate->x_star
                                            : zeros(problem.dimension);
  double half = box_half_width;
  if (half <= 0.0) half = 5.0 * (1.0 + norm(center));
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(num_points);
  for (std::size_t i = 0; i < num_points; ++i) {
    Vector x(problem.dimension);
    for (std::size_t j = 0; j < problem.dimension; ++j) {
      x[j] = center[j] + (2.0 * rng.uniform01() - 1.0) * half;
    }
    out.push_back(problem.region.project(x));
  }
  return out;
}

CheckRecord check_growth_model(const Problem& problem, std::size_t num_points,
                               std::uint64_t seed, double box_half_width) {
  const auto& cert = problem.require_certificate("check_growth_model");
  if (!problem.growth_model) {
    throw ConfigError("check_growth_model: no growth model declared for '" +
                      problem.name + "'");
  }
  const auto points = feasible_cloud(problem, num_points, seed, box_half_width);
  bool all_pass = true;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const Vector& x : points) {
    const double gap = problem.objective(x) - cert.f_star;
    const auto envelope =
        problem.growth_model->eval(distance(x, cert.x_star));
    if (!envelope) continue;  // unbounded tail of a table model
    const bool ok = gap <= *envelope * (1.0 + 1e-9) + 1e-15;
    all_pass = all_pass && ok;
    const double margin = *envelope - gap;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_lhs = gap;
      worst_rhs = *envelope;
    }
  }
  std::ostringstream key;
  key << "growth-model|" << problem.name << "|points=" << num_points
      << "|seed=" << seed;
  return make_record("growth-model", key.str(), worst_lhs, worst_rhs, all_pass,
                     problem.growth_model->describe());
}

CheckRecord check_second_moment_model(const Problem& problem,
                                      std::size_t num_points,
                                      std::uint64_t seed,
                                      double box_half_width) {
  const auto& cert = problem.require_certificate("check_second_moment_model");
  if (!problem.second_moment) {
    throw ConfigError("check_second_moment_model: no model declared for '" +
                      problem.name + "'");
  }
  if (!problem.stochastic_oracle || !problem.stochastic_oracle->finite_sum()) {
    throw UnsupportedError(
        "check_second_moment_model: finite uniform oracle required");
  }
  const auto points = feasible_cloud(problem, num_points, seed, box_half_width);
  bool all_pass = true;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const Vector& x : points) {
    const double lhs = exact_expectation(
        *problem.stochastic_oracle, x,
        [](const Vector& g) { return squared_norm(g); });
    const double rhs =
        problem.second_moment->bound(problem.objective(x) - cert.f_star);
    const bool ok = lhs <= rhs + 1e-9;
    all_pass = all_pass && ok;
    const double margin = rhs - lhs;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  std::ostringstream key;
  key << "second-moment|" << problem.name << "|points=" << num_points
      << "|seed=" << seed;
  return make_record("second-moment", key.str(), worst_lhs, worst_rhs,
                     all_pass);
}

}  // namespace subgrad
