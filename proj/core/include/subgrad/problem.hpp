#ifndef SUBGRAD_PROBLEM_HPP
#define SUBGRAD_PROBLEM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "subgrad/growth.hpp"
#include "subgrad/oracles.hpp"
#include "subgrad/region.hpp"
#include "subgrad/vector_ops.hpp"

namespace subgrad {

// Known-optimum data: a minimizer, its value, and (when the minimizer set
// has structure worth exposing) the projection onto it.
struct OptimumCertificate {
  Vector x_star;
  double f_star = 0.0;
  std::function<Vector(const Vector&)> project_onto_optimum_set;

  // Provenance, filled by certify_optimum for derived certificates.
  std::string method = "analytic";
  double residual = 0.0;
  bool low_confidence = false;
  std::optional<std::uint64_t> seed;
};

// Exact re-solver hook for problems whose structure admits one (e.g. the
// finite-sum hinge-plus-quadratic dual). Returns a polished primal point and
// a rigorous lower bound on f*, so certificate residuals are true duality
// gaps instead of run-length heuristics.
struct ExactCertifier {
  std::function<std::pair<Vector, double>(const Vector& warm_start,
                                          std::uint64_t budget)>
      solve;
};

struct Problem {
  std::string name;
  std::size_t dimension = 0;
  std::function<double(const Vector&)> objective;
  FeasibleRegion region = FeasibleRegion::whole_space();
  SubgradientOracle oracle;
  std::optional<StochasticOracle> stochastic_oracle;
  std::optional<OptimumCertificate> certificate;
  std::optional<double> strong_convexity_mu;
  std::optional<double> quadratic_growth_mu;
  std::optional<SecondMomentModel> second_moment;
  std::optional<GrowthModel> growth_model;
  std::optional<ExactCertifier> exact_certifier;

  double objective_gap(const Vector& x) const;
  // |x0 - x*| for the certified minimizer; theorem bounds require the exact
  // quantity, never an estimate.
  double distance_to_optimum(const Vector& x) const;
  double distance_to_optimum_set(const Vector& x) const;

  const OptimumCertificate& require_certificate(const char* who) const;
};

// Same problem restricted to a subregion (the certificate minimizer must
// stay feasible). Optionally overrides the declared second-moment model,
// since restriction can shrink the valid constants.
Problem constrained_to(Problem problem, FeasibleRegion region,
                       std::optional<SecondMomentModel> second_moment =
                           std::nullopt);

}  // namespace subgrad

#endif  // SUBGRAD_PROBLEM_HPP
