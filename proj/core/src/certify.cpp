#include "subgrad/certify.hpp"

#include <cmath>
#include <limits>

#include "subgrad/errors.hpp"
#include "subgrad/solver.hpp"
#include "subgrad/zoo.hpp"

namespace subgrad {

namespace {

double scalar_subgradient(const Problem& problem, double x) {
  return problem.oracle(Vector{x})[0];
}

// Feasible interval of a 1-d region; infinities for unbounded sides.
std::pair<double, double> interval_of(const FeasibleRegion& region) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (region.kind()) {
    case FeasibleRegion::Kind::whole_space:
      return {-inf, inf};
    case FeasibleRegion::Kind::box:
      return {region.lower()[0], region.upper()[0]};
    case FeasibleRegion::Kind::ball:
      return {region.center()[0] - region.radius(),
              region.center()[0] + region.radius()};
    case FeasibleRegion::Kind::nonnegative_orthant:
      return {0.0, inf};
    case FeasibleRegion::Kind::halfspace: {
      const double n = region.normal()[0];
      const double b = region.offset() / n;
      return n > 0 ? std::pair<double, double>{-inf, b}
                   : std::pair<double, double>{b, inf};
    }
  }
  return {-inf, inf};
}

OptimumCertificate certify_bisection(const Problem& problem,
                                     std::uint64_t budget,
                                     const CertifyOptions& options) {
  if (problem.dimension != 1) {
    throw ConfigError("certify bisection-1d: problem must be one-dimensional");
  }
  auto [feasible_lo, feasible_hi] = interval_of(problem.region);
  std::uint64_t evals = 0;
  const auto g = [&](double x) {
    ++evals;
    return scalar_subgradient(problem, x);
  };

  OptimumCertificate cert;
  cert.method = "bisection-1d";

  // Boundary minimizers: on an interval the sign of g at the ends decides.
  if (std::isfinite(feasible_lo) && g(feasible_lo) >= 0.0) {
    cert.x_star = {feasible_lo};
    cert.f_star = problem.objective(cert.x_star);
    cert.residual = 0.0;
    return cert;
  }
  if (std::isfinite(feasible_hi) && g(feasible_hi) <= 0.0) {
    cert.x_star = {feasible_hi};
    cert.f_star = problem.objective(cert.x_star);
    cert.residual = 0.0;
    return cert;
  }

  // Expand a bracket [lo, hi] with g(lo) < 0 <= g(hi). The finite region
  // ends were already ruled out as minimizers, so their signs are known.
  double lo = std::min(std::max(-1.0, feasible_lo), feasible_hi);
  double hi = std::max(std::min(1.0, feasible_hi), feasible_lo);
  double g_lo = g(lo);
  double g_hi = g(hi);
  while (g_lo > 0.0 && evals < budget) {
    hi = lo;
    g_hi = g_lo;
    lo = std::max(feasible_lo, lo * 2.0 - 1.0);
    g_lo = g(lo);
  }
  while (g_hi < 0.0 && evals < budget) {
    lo = hi;
    g_lo = g_hi;
    hi = std::min(feasible_hi, hi * 2.0 + 1.0);
    g_hi = g(hi);
  }

  bool width_met = false;
  while (evals < budget) {
    const double width = hi - lo;
    if (width <= 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi))) {
      width_met = true;
      break;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {  // interval collapsed to adjacent doubles
      width_met = true;
      break;
    }
    const double g_mid = g(mid);
    if (g_mid == 0.0) {
      lo = hi = mid;
      g_lo = g_hi = 0.0;
      width_met = true;
      break;
    }
    if (g_mid < 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }

  const double f_lo = problem.objective(Vector{lo});
  const double f_hi = problem.objective(Vector{hi});
  const double x_best = f_lo <= f_hi ? lo : hi;
  cert.x_star = {x_best};
  cert.f_star = std::min(f_lo, f_hi);
  // Minimizer lies in [lo, hi]; convexity bounds the gap by slope * width.
  cert.residual =
      (hi - lo) * std::max(std::fabs(g_lo), std::fabs(g_hi));
  cert.low_confidence = !width_met || cert.residual > options.residual_target;
  return cert;
}

OptimumCertificate certify_long_run(const Problem& problem,
                                    std::uint64_t budget,
                                    const CertifyOptions& options) {
  if (!problem.oracle) {
    throw ConfigError("certify long-run: deterministic oracle required");
  }

  OptimumCertificate cert;
  cert.method = "long-run";
  cert.seed = options.seed;

  Vector start = options.start ? *options.start : zeros(problem.dimension);
  start = problem.region.project(start);

  Vector best = start;
  double best_value = problem.objective(best);

  if (budget > 0) {
    if (!problem.strong_convexity_mu) {
      throw ConfigError(
          "certify long-run: extended strongly convex schedule needs "
          "strong_convexity_mu");
    }
    const double mu = *problem.strong_convexity_mu;
    const double l1 = problem.second_moment ? problem.second_moment->l1 : 0.0;

    // Same problem driven by the exact full-sum oracle, so the only error
    // left in the ground truth is schedule-induced.
    Problem exact = problem;
    exact.stochastic_oracle = deterministic_as_stochastic(problem.oracle);

    RunOptions run_options;
    run_options.start = start;
    run_options.record_objective = true;
    run_options.max_stored_coordinates = 0;

    const std::int64_t horizon = static_cast<std::int64_t>(budget) - 1;
    const RunTrace trace =
        run_stochastic(exact, StepSchedule::extended_strongly_convex(mu, l1),
                       horizon, options.seed, run_options);
    const Vector run_best = weighted_average(
        trace, AveragingRule{AverageKind::best_iterate, 0.0});
    const double run_best_value = problem.objective(run_best);
    if (run_best_value < best_value) {
      best = run_best;
      best_value = run_best_value;
    }
  }

  double lower_bound = -std::numeric_limits<double>::infinity();
  if (budget > 0 && problem.exact_certifier &&
      problem.exact_certifier->solve) {
    auto [polished, lb] = problem.exact_certifier->solve(best, budget);
    const double polished_value = problem.objective(polished);
    if (polished_value < best_value) {
      best = polished;
      best_value = polished_value;
    }
    lower_bound = lb;
  }

  cert.x_star = best;
  cert.f_star = best_value;
  if (std::isfinite(lower_bound)) {
    cert.residual = std::max(0.0, best_value - lower_bound);
  } else if (problem.strong_convexity_mu && budget > 0) {
    // No exact re-solver: estimate the remaining gap from the subgradient at
    // the reported point, f(x) - f* <= |g(x)|^2 / (2 mu).
    const double g_norm = norm(problem.oracle(best));
    cert.residual =
        g_norm * g_norm / (2.0 * *problem.strong_convexity_mu);
  } else {
    cert.residual = std::numeric_limits<double>::infinity();
  }
  cert.low_confidence = !(cert.residual <= options.residual_target);
  return cert;
}

}  // namespace

OptimumCertificate certify_optimum(const Problem& problem, CertifyMethod method,
                                   std::uint64_t budget,
                                   const CertifyOptions& options) {
  switch (method) {
    case CertifyMethod::bisection_1d:
      return certify_bisection(problem, budget, options);
    case CertifyMethod::long_run:
      return certify_long_run(problem, budget, options);
  }
  throw ConfigError("certify_optimum: unknown method");
}

}  // namespace subgrad
