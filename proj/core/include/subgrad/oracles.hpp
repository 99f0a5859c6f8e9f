#ifndef SUBGRAD_ORACLES_HPP
#define SUBGRAD_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "subgrad/rng.hpp"
#include "subgrad/vector_ops.hpp"

namespace subgrad {

// Deterministic oracle: returns an arbitrary subgradient at x.
using SubgradientOracle = std::function<Vector(const Vector&)>;

// Unbiased stochastic subgradient estimator over a sampleable distribution.
//
// sample_count > 0 describes a finite uniform sample space {0, .., n-1};
// expectations over it can then be enumerated exactly. sample_count == 0
// means a custom seeded space: the estimator receives a raw 64-bit draw and
// interprets it itself (exact expectations are unsupported there).
struct StochasticOracle {
  std::uint64_t sample_count = 0;
  std::function<Vector(const Vector&, std::uint64_t)> estimator;
  std::uint64_t rng_seed = 0;

  bool finite_sum() const { return sample_count > 0; }

  std::uint64_t sample(Rng& rng) const {
    return finite_sum() ? rng.uniform_index(sample_count) : rng.next_u64();
  }
};

// (1/n) sum_i functional(estimator(x, i)) with compensated summation.
// Throws UnsupportedError for non-finite sample spaces.
double exact_expectation(const StochasticOracle& oracle, const Vector& x,
                         const std::function<double(const Vector&)>& functional);

// Exact mean of the estimator itself, component-wise compensated. This is
// the E_xi g(x;xi) that enters the per-step inequality checks.
Vector exact_expected_estimate(const StochasticOracle& oracle, const Vector& x);

// True iff f(y) >= f(x) + g.(y-x) - 1e-9 (1+|f(y)|) for every probe y.
bool subgradient_inequality_check(
    const std::function<double(const Vector&)>& objective, const Vector& x,
    const Vector& g, std::span<const Vector> probe_points);

}  // namespace subgrad

#endif  // SUBGRAD_ORACLES_HPP
