#include "subgrad/problem.hpp"

#include "subgrad/errors.hpp"

namespace subgrad {

double Problem::objective_gap(const Vector& x) const {
  return objective(x) - require_certificate("objective_gap").f_star;
}

double Problem::distance_to_optimum(const Vector& x) const {
  return distance(x, require_certificate("distance_to_optimum").x_star);
}

double Problem::distance_to_optimum_set(const Vector& x) const {
  const auto& cert = require_certificate("distance_to_optimum_set");
  if (cert.project_onto_optimum_set) {
    return distance(x, cert.project_onto_optimum_set(x));
  }
  return distance(x, cert.x_star);
}

const OptimumCertificate& Problem::require_certificate(const char* who) const {
  if (!certificate) {
    throw ConfigError(std::string(who) + ": problem '" + name +
                      "' has no optimum certificate");
  }
  return *certificate;
}

Problem constrained_to(Problem problem, FeasibleRegion region,
                       std::optional<SecondMomentModel> second_moment) {
  if (problem.certificate &&
      !region.contains(problem.certificate->x_star, 1e-9)) {
    throw ConfigError("constrained_to: certified minimizer of '" +
                      problem.name + "' is infeasible for the new region");
  }
  problem.region = std::move(region);
  problem.name += "|" + problem.region.describe();
  if (second_moment) problem.second_moment = second_moment;
  return problem;
}

}  // namespace subgrad
