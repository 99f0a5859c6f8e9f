#include "subgrad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <thread>

#include "subgrad/errors.hpp"

namespace subgrad {

namespace {

// Index into RunTrace::Aggregates for each weighted family (best_iterate is
// tracked separately).
int family_index(AverageKind kind) {
  switch (kind) {
    case AverageKind::uniform: return 0;
    case AverageKind::alpha_weighted: return 1;
    case AverageKind::alpha_two_minus_weighted: return 2;
    case AverageKind::linear_weighted: return 3;
    case AverageKind::linear_two_minus_weighted: return 4;
    case AverageKind::linear_one_minus_weighted: return 5;
    case AverageKind::best_iterate: return -1;
  }
  return -1;
}

double rule_weight(AverageKind kind, std::int64_t k, double alpha, double l1) {
  const double kd = static_cast<double>(k);
  switch (kind) {
    case AverageKind::uniform: return 1.0;
    case AverageKind::alpha_weighted: return alpha;
    case AverageKind::alpha_two_minus_weighted:
      return alpha * (2.0 - l1 * alpha);
    case AverageKind::linear_weighted: return kd + 1.0;
    case AverageKind::linear_two_minus_weighted:
      return (kd + 1.0) * (2.0 - l1 * alpha);
    case AverageKind::linear_one_minus_weighted:
      return (kd + 1.0) * (1.0 - l1 * alpha);
    case AverageKind::best_iterate: return 0.0;
  }
  return 0.0;
}

constexpr AverageKind kWeightedKinds[RunTrace::kWeightFamilies] = {
    AverageKind::uniform,
    AverageKind::alpha_weighted,
    AverageKind::alpha_two_minus_weighted,
    AverageKind::linear_weighted,
    AverageKind::linear_two_minus_weighted,
    AverageKind::linear_one_minus_weighted,
};

struct RunState {
  RunTrace trace;
  const Problem* problem;
  bool record_objective;
  double current_objective = 0.0;

  void init(const Problem& prob, const Vector& x0, std::int64_t horizon,
            const RunOptions& options) {
    problem = &prob;
    record_objective = options.record_objective;
    trace.dimension = prob.dimension;
    trace.requested_horizon = horizon;
    trace.aggregates.l1 =
        prob.second_moment ? prob.second_moment->l1 : 0.0;
    trace.aggregates.objective_tracked = record_objective;
    for (auto& sum : trace.aggregates.weighted_points) {
      sum.resize(prob.dimension);
    }
    const std::size_t coords =
        (static_cast<std::size_t>(horizon) + 2) * std::max<std::size_t>(1, prob.dimension);
    trace.iterates_stored = coords <= options.max_stored_coordinates;
    trace.step_sizes.reserve(static_cast<std::size_t>(horizon) + 1);
    record_point(x0);
  }

  void record_point(const Vector& x) {
    if (!is_finite(x)) {
      throw OracleError("run aborted: iterate became non-finite");
    }
    if (trace.iterates_stored) trace.iterates.push_back(x);
    trace.final_iterate = x;
    if (record_objective) {
      current_objective = problem->objective(x);
      if (!std::isfinite(current_objective)) {
        throw OracleError("run aborted: objective non-finite on the region");
      }
      trace.objective_values.push_back(current_objective);
      if (problem->certificate) {
        trace.objective_gaps.push_back(current_objective -
                                       problem->certificate->f_star);
      }
    }
  }

  // Fold iterate k into the averaging window with step alpha_k.
  void accumulate(const Vector& x, std::int64_t k, double alpha) {
    auto& agg = trace.aggregates;
    for (std::size_t f = 0; f < RunTrace::kWeightFamilies; ++f) {
      const double w = rule_weight(kWeightedKinds[f], k, alpha, agg.l1);
      agg.weighted_points[f].add_scaled(x, w);
      agg.weight_totals[f].add(w);
    }
    if (record_objective && current_objective < agg.best_value) {
      agg.best_value = current_objective;
      agg.best_index = static_cast<std::size_t>(k);
      agg.best_point = x;
    }
  }
};

Vector starting_point(const Problem& problem, const RunOptions& options) {
  Vector x0 = options.start ? *options.start : zeros(problem.dimension);
  if (x0.size() != problem.dimension) {
    throw InvalidInputError("run: starting point dimension mismatch");
  }
  return problem.region.project(x0);
}

Vector checked_oracle_output(Vector g, std::int64_t k) {
  if (!is_finite(g)) {
    throw OracleError("run aborted: oracle returned non-finite vector at k=" +
                      std::to_string(k));
  }
  return g;
}

}  // namespace

const char* to_string(AverageKind kind) {
  switch (kind) {
    case AverageKind::best_iterate: return "best-iterate";
    case AverageKind::uniform: return "uniform";
    case AverageKind::alpha_weighted: return "alpha";
    case AverageKind::alpha_two_minus_weighted: return "alpha-2ml1a";
    case AverageKind::linear_weighted: return "k+1";
    case AverageKind::linear_two_minus_weighted: return "k+1-2ml1a";
    case AverageKind::linear_one_minus_weighted: return "k+1-1ml1a";
  }
  return "?";
}

double RunTrace::min_gap() const {
  if (objective_gaps.empty()) {
    throw ConfigError("min_gap: trace has no objective gaps (certificate "
                      "missing or objective not recorded)");
  }
  const std::size_t window =
      std::min(objective_gaps.size(),
               static_cast<std::size_t>(requested_horizon) + 1);
  double best = objective_gaps[0];
  for (std::size_t k = 1; k < window; ++k) best = std::min(best, objective_gaps[k]);
  return best;
}

RunTrace run_deterministic(const Problem& problem, const StepSchedule& schedule,
                           std::int64_t horizon, const RunOptions& options) {
  if (!problem.oracle) {
    throw ConfigError("run_deterministic: problem '" + problem.name +
                      "' has no deterministic oracle");
  }
  RunState state;
  Vector x = starting_point(problem, options);
  state.init(problem, x, horizon, options);

  for (std::int64_t k = 0; k <= horizon; ++k) {
    const Vector g = checked_oracle_output(problem.oracle(x), k);
    const double g_norm = norm(g);
    const double alpha = schedule.step(k);
    if (g_norm <= kZeroSubgradientScale * (1.0 + norm(x))) {
      // The terminal iterate still belongs to the averaging window; record
      // the prescribed step so recomputed weights agree with the aggregates.
      state.accumulate(x, k, alpha);
      state.trace.step_sizes.push_back(alpha);
      state.trace.terminated_at_minimizer = k;
      break;
    }
    if (problem.certificate) {
      state.trace.hyperplane_distances.push_back(
          dot(g, subtract(x, problem.certificate->x_star)) / g_norm);
    }
    state.accumulate(x, k, alpha);
    state.trace.step_sizes.push_back(alpha);
    x = problem.region.project(step_from(x, g, alpha / g_norm));
    state.record_point(x);
  }
  return state.trace;
}

RunTrace run_stochastic(const Problem& problem, const StepSchedule& schedule,
                        std::int64_t horizon, std::uint64_t seed,
                        const RunOptions& options) {
  if (!problem.stochastic_oracle || !problem.stochastic_oracle->estimator) {
    throw ConfigError("run_stochastic: problem '" + problem.name +
                      "' has no stochastic oracle");
  }
  const StochasticOracle& oracle = *problem.stochastic_oracle;
  RunState state;
  Vector x = starting_point(problem, options);
  state.init(problem, x, horizon, options);
  state.trace.seed = seed;
  state.trace.xi_indices.reserve(static_cast<std::size_t>(horizon) + 1);

  Rng rng(seed);
  for (std::int64_t k = 0; k <= horizon; ++k) {
    const std::uint64_t xi = oracle.sample(rng);
    const Vector g = checked_oracle_output(oracle.estimator(x, xi), k);
    const double alpha = schedule.step(k);
    state.accumulate(x, k, alpha);
    state.trace.xi_indices.push_back(xi);
    state.trace.step_sizes.push_back(alpha);
    x = problem.region.project(step_from(x, g, alpha));
    state.record_point(x);
  }
  return state.trace;
}

Vector weighted_average(const RunTrace& trace, const AveragingRule& rule) {
  const auto& agg = trace.aggregates;
  if (rule.kind == AverageKind::best_iterate) {
    if (!agg.objective_tracked || !agg.best_index) {
      throw ConfigError(
          "weighted_average: best-iterate requires objective tracking");
    }
    return agg.best_point;
  }

  const int family = family_index(rule.kind);
  const bool l1_sensitive =
      rule.kind == AverageKind::alpha_two_minus_weighted ||
      rule.kind == AverageKind::linear_two_minus_weighted ||
      rule.kind == AverageKind::linear_one_minus_weighted;
  const bool aggregate_usable = !l1_sensitive || rule.l1 == agg.l1;

  if (aggregate_usable) {
    const double total = agg.weight_totals[family].value();
    if (!(total > 0.0)) {
      throw PreconditionError("weighted_average: total weight is not positive");
    }
    return scaled(agg.weighted_points[family].value(), 1.0 / total);
  }

  // L1 differs from the one frozen at run time: recompute from the stored
  // iterates.
  if (!trace.iterates_stored) {
    throw ConfigError(
        "weighted_average: trace iterates were capped and the requested L1 "
        "differs from the run-time value");
  }
  KahanVectorSum sum(trace.dimension);
  KahanSum total;
  const std::size_t window =
      std::min(trace.step_sizes.size(), trace.iterates.size());
  for (std::size_t k = 0; k < window; ++k) {
    const double w = rule_weight(rule.kind, static_cast<std::int64_t>(k),
                                 trace.step_sizes[k], rule.l1);
    sum.add_scaled(trace.iterates[k], w);
    total.add(w);
  }
  if (!(total.value() > 0.0)) {
    throw PreconditionError("weighted_average: total weight is not positive");
  }
  return scaled(sum.value(), 1.0 / total.value());
}

std::pair<double, double> mean_and_standard_error(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw ConfigError("mean_and_standard_error: need at least two samples");
  }
  KahanSum sum;
  for (double v : xs) sum.add(v);
  const double mean = sum.value() / static_cast<double>(xs.size());
  KahanSum sq;
  for (double v : xs) sq.add((v - mean) * (v - mean));
  const double variance = sq.value() / static_cast<double>(xs.size() - 1);
  const double se = std::sqrt(variance / static_cast<double>(xs.size()));
  return {mean, se};
}

EnsembleResult ensemble_expectation(const Problem& problem,
                                    const StepSchedule& schedule,
                                    std::int64_t horizon,
                                    const AveragingRule& rule,
                                    std::size_t num_seeds,
                                    std::uint64_t base_seed,
                                    const RunOptions& options) {
  if (num_seeds < 2) {
    throw ConfigError("ensemble_expectation: need at least two seeds");
  }
  const double f_star =
      problem.require_certificate("ensemble_expectation").f_star;

  RunOptions run_options = options;
  run_options.record_objective = rule.kind == AverageKind::best_iterate;
  run_options.max_stored_coordinates = 0;  // averages come from aggregates

  std::vector<double> gaps(num_seeds, 0.0);
  std::vector<std::exception_ptr> failures(num_seeds);

  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        const RunTrace trace =
            run_stochastic(problem, schedule, horizon,
                           base_seed + static_cast<std::uint64_t>(i),
                           run_options);
        const Vector point = weighted_average(trace, rule);
        gaps[i] = problem.objective(point) - f_star;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hardware, num_seeds);
  if (workers <= 1) {
    worker(0, num_seeds);
  } else {
    std::vector<std::future<void>> futures;
    const std::size_t chunk = (num_seeds + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(num_seeds, begin + chunk);
      if (begin >= end) break;
      futures.push_back(
          std::async(std::launch::async, worker, begin, end));
    }
    for (auto& f : futures) f.get();
  }

  for (std::size_t i = 0; i < num_seeds; ++i) {
    if (failures[i]) {
      try {
        std::rethrow_exception(failures[i]);
      } catch (const std::exception& e) {
        throw OracleError("ensemble run failed at seed " +
                          std::to_string(base_seed + i) + ": " + e.what());
      }
    }
  }

  EnsembleResult result;
  const auto [mean, se] = mean_and_standard_error(gaps);
  result.mean_gap = mean;
  result.standard_error = se;
  result.gaps = std::move(gaps);
  return result;
}

}  // namespace subgrad
