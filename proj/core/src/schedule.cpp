#include "subgrad/schedule.hpp"

#include <cmath>

#include "subgrad/errors.hpp"

namespace subgrad {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("schedule: ") + what + " must be positive");
  }
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("schedule: ") + what +
                      " must be nonnegative");
  }
}

}  // namespace

StepSchedule StepSchedule::constant_deterministic(double distance_to_optimum,
                                                  std::int64_t horizon) {
  require_positive(distance_to_optimum, "R");
  if (horizon < 0) throw ConfigError("schedule: horizon must be >= 0");
  StepSchedule s(Kind::constant);
  s.r_ = distance_to_optimum;
  s.horizon_ = horizon;
  return s;
}

StepSchedule StepSchedule::constant_stochastic(double distance_to_optimum,
                                               double l0, std::int64_t horizon,
                                               double l1) {
  require_positive(distance_to_optimum, "R");
  require_positive(l0, "L0");
  require_nonnegative(l1, "L1");
  if (horizon < 0) throw ConfigError("schedule: horizon must be >= 0");
  StepSchedule s(Kind::constant);
  s.r_ = distance_to_optimum;
  s.l0_ = l0;
  s.l1_ = l1;
  s.horizon_ = horizon;
  s.stochastic_constant_ = true;
  const double alpha = s.step(0);
  if (l1 * alpha >= 2.0) {
    throw ConfigError(
        "schedule: constant stochastic step violates L1*alpha < 2 at this "
        "horizon (T too small); refusing to build");
  }
  return s;
}

StepSchedule StepSchedule::classic_strongly_convex(double mu) {
  require_positive(mu, "mu");
  StepSchedule s(Kind::classic_strongly_convex);
  s.mu_ = mu;
  return s;
}

StepSchedule StepSchedule::extended_strongly_convex(double mu, double l1) {
  require_positive(mu, "mu");
  require_nonnegative(l1, "L1");
  StepSchedule s(Kind::extended_strongly_convex);
  s.mu_ = mu;
  s.l1_ = l1;
  return s;
}

StepSchedule StepSchedule::quadratic_growth(double mu, double l1) {
  require_positive(mu, "mu");
  require_nonnegative(l1, "L1");
  StepSchedule s(Kind::quadratic_growth);
  s.mu_ = mu;
  s.l1_ = l1;
  return s;
}

StepSchedule StepSchedule::quad_regularized_svm(double lambda) {
  require_positive(lambda, "lambda");
  StepSchedule s(Kind::quad_regularized_svm);
  s.mu_ = lambda;
  return s;
}

StepSchedule StepSchedule::user_sequence(std::vector<double> alphas) {
  if (alphas.empty()) throw ConfigError("schedule: empty user sequence");
  for (double a : alphas) require_positive(a, "user alpha");
  StepSchedule s(Kind::user_sequence);
  s.alphas_ = std::move(alphas);
  return s;
}

double StepSchedule::step(std::int64_t k) const {
  if (k < 0) throw ConfigError("schedule: k must be >= 0");
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case Kind::constant: {
      const double root = std::sqrt(static_cast<double>(horizon_) + 1.0);
      return stochastic_constant_ ? r_ / (l0_ * root) : r_ / root;
    }
    case Kind::classic_strongly_convex:
      return 2.0 / (mu_ * (kd + 2.0));
    case Kind::extended_strongly_convex:
      return 2.0 / (mu_ * (kd + 2.0) + l1_ * l1_ / (mu_ * (kd + 1.0)));
    case Kind::quadratic_growth:
      return 4.0 / (mu_ * (kd + 2.0) + 4.0 * l1_ * l1_ / (mu_ * (kd + 1.0)));
    case Kind::quad_regularized_svm:
      return 2.0 / (mu_ * (kd + 2.0) + 36.0 * mu_ / (kd + 1.0));
    case Kind::user_sequence:
      if (static_cast<std::size_t>(k) >= alphas_.size()) {
        throw ConfigError("schedule: user sequence exhausted at k=" +
                          std::to_string(k));
      }
      return alphas_[static_cast<std::size_t>(k)];
  }
  throw ConfigError("schedule: unknown kind");
}

std::vector<double> StepSchedule::steps(std::int64_t horizon) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(horizon + 1));
  for (std::int64_t k = 0; k <= horizon; ++k) out.push_back(step(k));
  return out;
}

std::string StepSchedule::describe() const {
  switch (kind_) {
    case Kind::constant:
      return (stochastic_constant_ ? "constant-stochastic(R=" : "constant(R=") +
             std::to_string(r_) + ",T=" + std::to_string(horizon_) + ")";
    case Kind::classic_strongly_convex:
      return "classic-sc(mu=" + std::to_string(mu_) + ")";
    case Kind::extended_strongly_convex:
      return "extended-sc(mu=" + std::to_string(mu_) +
             ",L1=" + std::to_string(l1_) + ")";
    case Kind::quadratic_growth:
      return "quadratic-growth(mu=" + std::to_string(mu_) +
             ",L1=" + std::to_string(l1_) + ")";
    case Kind::quad_regularized_svm:
      return "svm(lambda=" + std::to_string(mu_) + ")";
    case Kind::user_sequence:
      return "user(" + std::to_string(alphas_.size()) + " steps)";
  }
  return "?";
}

bool recurrence_holds(std::span<const double> alphas, double mu_effective,
                      double relative_tolerance) {
  for (std::size_t k = 0; k + 1 < alphas.size(); ++k) {
    const double kd = static_cast<double>(k);
    const double lhs = (kd + 1.0) / alphas[k];
    const double rhs = (kd + 2.0) * (1.0 / alphas[k + 1] - mu_effective);
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (std::fabs(lhs - rhs) > relative_tolerance * std::max(1.0, scale)) {
      return false;
    }
  }
  return true;
}

bool verify_recurrence(const StepSchedule& schedule, std::int64_t horizon) {
  double mu_effective = 0.0;
  switch (schedule.kind()) {
    case StepSchedule::Kind::extended_strongly_convex:
      mu_effective = schedule.mu();
      break;
    case StepSchedule::Kind::quadratic_growth:
      mu_effective = schedule.mu() / 2.0;
      break;
    default:
      throw UnsupportedError(
          "verify_recurrence: defined only for the extended strongly convex "
          "and quadratic-growth schedules");
  }
  const std::vector<double> alphas = schedule.steps(horizon);
  return recurrence_holds(alphas, mu_effective);
}

bool verify_bounded_product(const StepSchedule& schedule,
                            std::int64_t horizon) {
  const bool strict =
      schedule.kind() == StepSchedule::Kind::quadratic_growth;
  if (!strict &&
      schedule.kind() != StepSchedule::Kind::extended_strongly_convex) {
    throw UnsupportedError(
        "verify_bounded_product: defined only for the extended strongly "
        "convex and quadratic-growth schedules");
  }
  for (std::int64_t k = 0; k <= horizon; ++k) {
    const double product = schedule.l1() * schedule.step(k);
    if (strict ? !(product < 1.0) : !(product <= 1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace subgrad
