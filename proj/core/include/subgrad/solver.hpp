#ifndef SUBGRAD_SOLVER_HPP
#define SUBGRAD_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subgrad/problem.hpp"
#include "subgrad/schedule.hpp"
#include "subgrad/trace.hpp"

namespace subgrad {

struct RunOptions {
  // Starting point; default is the projection of the origin onto the region.
  std::optional<Vector> start;
  // Track f at every iterate (needed for gaps, best-iterate and trace CSVs).
  bool record_objective = true;
  // Iterates are stored while (T+2) * d fits under this cap.
  std::size_t max_stored_coordinates = 1'000'000;
};

// Subgradient norms at or below 1e-14 (1 + |x|) count as "minimizer found";
// the normalized iteration is undefined past that point.
inline constexpr double kZeroSubgradientScale = 1e-14;

// Normalized deterministic iteration
//   x_{k+1} = P_Q(x_k - alpha_k g(x_k) / |g(x_k)|)
// for k = 0..T. Stops early, recording terminated_at_minimizer, once the
// subgradient vanishes. With a certificate the trace carries objective gaps
// and the hyperplane distances g(x_k).(x_k - x*) / |g(x_k)|.
RunTrace run_deterministic(const Problem& problem, const StepSchedule& schedule,
                           std::int64_t horizon,
                           const RunOptions& options = {});

// Stochastic iteration x_{k+1} = P_Q(x_k - alpha_k g(x_k; xi_k)). The xi
// draws are a pure function of the seed; identical inputs give a bitwise
// identical trace.
RunTrace run_stochastic(const Problem& problem, const StepSchedule& schedule,
                        std::int64_t horizon, std::uint64_t seed,
                        const RunOptions& options = {});

// sum_k w_k x_k / sum_k w_k over the averaging window k = 0..T, compensated.
// best_iterate returns argmin_k f(x_k), ties to the smallest k.
Vector weighted_average(const RunTrace& trace, const AveragingRule& rule);

struct EnsembleResult {
  double mean_gap = 0.0;
  double standard_error = 0.0;
  std::vector<double> gaps;  // per seed, in seed order
};

// M independent seeded trajectories (seeds base_seed .. base_seed+M-1), gap
// of the rule's average point per trajectory; sample mean and standard error
// of the mean. Seeds run in parallel but merge in seed order, so the result
// does not depend on thread scheduling.
EnsembleResult ensemble_expectation(const Problem& problem,
                                    const StepSchedule& schedule,
                                    std::int64_t horizon,
                                    const AveragingRule& rule,
                                    std::size_t num_seeds,
                                    std::uint64_t base_seed,
                                    const RunOptions& options = {});

// Sample mean and standard error of the mean (Bessel-corrected).
std::pair<double, double> mean_and_standard_error(std::span<const double> xs);

}  // namespace subgrad

#endif  // SUBGRAD_SOLVER_HPP
