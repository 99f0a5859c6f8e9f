#include "subgrad/oracles.hpp"

#include "subgrad/errors.hpp"
#include "subgrad/kahan.hpp"

namespace subgrad {

double exact_expectation(
    const StochasticOracle& oracle, const Vector& x,
    const std::function<double(const Vector&)>& functional) {
  if (!oracle.finite_sum()) {
    throw UnsupportedError(
        "exact_expectation: sample space is not a finite uniform set");
  }
  KahanSum sum;
  for (std::uint64_t i = 0; i < oracle.sample_count; ++i) {
    sum.add(functional(oracle.estimator(x, i)));
  }
  return sum.value() / static_cast<double>(oracle.sample_count);
}

Vector exact_expected_estimate(const StochasticOracle& oracle,
                               const Vector& x) {
  if (!oracle.finite_sum()) {
    throw UnsupportedError(
        "exact_expected_estimate: sample space is not a finite uniform set");
  }
  KahanVectorSum sum(x.size());
  for (std::uint64_t i = 0; i < oracle.sample_count; ++i) {
    sum.add_scaled(oracle.estimator(x, i), 1.0);
  }
  return scaled(sum.value(), 1.0 / static_cast<double>(oracle.sample_count));
}

bool subgradient_inequality_check(
    const std::function<double(const Vector&)>& objective, const Vector& x,
    const Vector& g, std::span<const Vector> probe_points) {
  const double fx = objective(x);
  for (const Vector& y : probe_points) {
    const double fy = objective(y);
    const double linear = fx + dot(g, subtract(y, x));
    if (fy < linear - 1e-9 * (1.0 + std::fabs(fy))) return false;
  }
  return true;
}

}  // namespace subgrad
