#ifndef SUBGRAD_CHECKS_HPP
#define SUBGRAD_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subgrad/bounds.hpp"
#include "subgrad/problem.hpp"
#include "subgrad/schedule.hpp"
#include "subgrad/solver.hpp"

namespace subgrad {

// One verification record: an inequality, the two sides, and the verdict.
// margin = rhs - lhs (negative means violated).
struct CheckRecord {
  std::string check_id;
  std::string params_digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string note;
};

CheckRecord make_record(std::string check_id, std::string params, double lhs,
                        double rhs, bool pass, std::string note = "");

// FNV-1a 64-bit over a canonical parameter string, rendered as hex.
std::string params_digest(const std::string& params);

// Relative comparison helper used by every inequality check below.
inline bool leq_rel(double lhs, double rhs, double tol = 1e-9) {
  return lhs <= rhs + tol * (1.0 + std::fabs(rhs));
}

// --- per-step expectation inequality -------------------------------------

struct Lemma3Result {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

// E_xi |P_Q(x - a g(x;xi)) - y|^2  <=
//   |x - y|^2 - 2 a (E_xi g).(x - y) + a^2 E_xi |g|^2,
// expectations enumerated exactly over the finite uniform sample space.
Lemma3Result check_lemma3_step(const Problem& problem, const Vector& x,
                               const Vector& y, double alpha);

// Every step of a stochastic trace must satisfy the per-step inequality with
// y = x*. Requires stored iterates and a certificate.
CheckRecord check_lemma3_along_trace(const Problem& problem,
                                     const RunTrace& trace);

// --- hyperplane-distance guarantee ----------------------------------------

// Either the run stopped at a minimizer, or
//   min_k g(x_k).(x_k - x*)/|g(x_k)| <= (R^2 + sum a^2) / (2 sum a).
CheckRecord check_shor(const Problem& problem, const RunTrace& trace,
                       double distance_to_optimum,
                       std::span<const double> alphas);

// --- deterministic objective-gap rates ------------------------------------

// min_k f(x_k) - f* against the theorem display. T2 uses the problem's
// growth model directly; C2/C3/C4 require the matching model kind.
CheckRecord check_deterministic_rate(const Problem& problem,
                                     const RunTrace& trace, TheoremId theorem,
                                     std::span<const double> alphas);

// --- stochastic expectation rates ------------------------------------------

struct StochasticRateResult {
  double mean = 0.0;
  double standard_error = 0.0;
  double bound = 0.0;
  bool pass = false;
  CheckRecord record;
};

struct StochasticRateSpec {
  TheoremId theorem = TheoremId::T3;
  std::int64_t horizon = 0;
  std::size_t num_seeds = 200;
  std::uint64_t base_seed = 1;
  std::optional<AveragingRule> rule;  // defaults to the theorem's average
  std::optional<Vector> start;
};

AveragingRule default_rule_for(TheoremId theorem, double l1);

// Expectation bound of the theorem assembled from the problem's declared
// constants and the schedule's actual steps. Hypothesis mismatches (missing
// strong convexity, L1 alpha out of range, ...) raise ConfigError naming the
// violated hypothesis.
double stochastic_bound(const Problem& problem, const StepSchedule& schedule,
                        TheoremId theorem, std::int64_t horizon,
                        const Vector& start);

// Runs the seed ensemble and tests  mean gap <= bound + 3 SE.
StochasticRateResult check_stochastic_rate(const Problem& problem,
                                           const StepSchedule& schedule,
                                           const StochasticRateSpec& spec);

// --- quadratic-growth characterization of the steepness bound --------------

struct Prop1Options {
  double l0 = 0.0;
  double l1 = 0.0;
  // inf_U f; defaults to the certificate value (the minimizer is assumed to
  // lie in the sampled set). When absent the infimum is estimated on the
  // grid and the check is labeled approximate.
  std::optional<double> infimum;
};

// f(y) <= f(x) + (L1/4)|y-x|^2 + |y-x| sqrt(L1 (f(x)-inf) + L0^2) over all
// ordered grid pairs.
CheckRecord check_prop1_forward(const Problem& problem,
                                std::span<const Vector> grid,
                                const Prop1Options& options);

// |g(x)|^2 <= L0^2 + L1 (f(x) - inf) at every grid point.
CheckRecord check_prop1_reverse(const Problem& problem,
                                std::span<const Vector> grid,
                                const Prop1Options& options);

// --- declared-model certification sweeps -----------------------------------

// f(x) - f* <= D(|x - x*|) (1 + 1e-9) at sampled feasible points.
CheckRecord check_growth_model(const Problem& problem, std::size_t num_points,
                               std::uint64_t seed, double box_half_width = 0.0);

// E_xi |g(x;xi)|^2 <= L0^2 + L1 (f(x) - f*) + 1e-9 at sampled feasible
// points, expectation enumerated exactly.
CheckRecord check_second_moment_model(const Problem& problem,
                                      std::size_t num_points,
                                      std::uint64_t seed,
                                      double box_half_width = 0.0);

// Uniform grid over [lo, hi] in one dimension.
std::vector<Vector> grid_1d(double lo, double hi, std::size_t points);

// Seeded cloud of feasible points: box samples around the certificate
// minimizer (or origin), projected onto the region.
std::vector<Vector> feasible_cloud(const Problem& problem,
                                   std::size_t num_points, std::uint64_t seed,
                                   double box_half_width = 0.0);

}  // namespace subgrad

#endif  // SUBGRAD_CHECKS_HPP
