#ifndef SUBGRAD_TRACE_HPP
#define SUBGRAD_TRACE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "subgrad/kahan.hpp"
#include "subgrad/vector_ops.hpp"

namespace subgrad {

// Output-point selection rules. The weighted kinds mirror the averages whose
// expected gap the stochastic rate theorems bound; weights may involve the
// second-moment constant L1.
enum class AverageKind {
  best_iterate,
  uniform,
  alpha_weighted,              // w_k = alpha_k
  alpha_two_minus_weighted,    // w_k = alpha_k (2 - L1 alpha_k)
  linear_weighted,             // w_k = k + 1
  linear_two_minus_weighted,   // w_k = (k+1) (2 - L1 alpha_k)
  linear_one_minus_weighted,   // w_k = (k+1) (1 - L1 alpha_k)
};

struct AveragingRule {
  AverageKind kind = AverageKind::best_iterate;
  double l1 = 0.0;
};

const char* to_string(AverageKind kind);

// Record of one solver run. Iterates are stored in full up to a coordinate
// cap; the per-rule weighted sums, the best iterate and the scalar series
// are always kept, so averages remain computable for capped runs.
struct RunTrace {
  std::size_t dimension = 0;
  std::int64_t requested_horizon = 0;

  std::vector<Vector> iterates;  // x_0 .. x_{T+1} when stored
  bool iterates_stored = true;
  Vector final_iterate;

  std::vector<double> step_sizes;             // alpha_0 .. alpha_T
  std::vector<double> objective_values;       // f(x_k), if tracked
  std::vector<double> objective_gaps;         // f(x_k) - f*, with certificate
  std::vector<double> hyperplane_distances;   // deterministic runs only
  std::vector<std::uint64_t> xi_indices;      // stochastic runs only

  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> terminated_at_minimizer;

  // Online aggregates over the averaging window k = 0..T.
  static constexpr std::size_t kWeightFamilies = 6;
  struct Aggregates {
    double l1 = 0.0;
    bool objective_tracked = false;
    std::array<KahanVectorSum, kWeightFamilies> weighted_points;
    std::array<KahanSum, kWeightFamilies> weight_totals;
    std::optional<std::size_t> best_index;
    double best_value = std::numeric_limits<double>::infinity();
    Vector best_point;
  };
  Aggregates aggregates;

  // Smallest recorded objective gap over the averaging window k = 0..T.
  // Requires a certificate-backed run (objective_gaps nonempty).
  double min_gap() const;
};

}  // namespace subgrad

#endif  // SUBGRAD_TRACE_HPP
