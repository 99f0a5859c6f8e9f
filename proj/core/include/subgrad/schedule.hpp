#ifndef SUBGRAD_SCHEDULE_HPP
#define SUBGRAD_SCHEDULE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subgrad {

// Pure step-size rule k -> alpha_k. Every kind emits strictly positive
// steps; kinds with a horizon-dependent validity condition check it at
// construction and refuse to build rather than run outside their theory.
class StepSchedule {
 public:
  enum class Kind {
    constant,                   // R/sqrt(T+1), or R/(L0 sqrt(T+1)) stochastic
    classic_strongly_convex,    // 2 / (mu (k+2))
    extended_strongly_convex,   // 2 / (mu (k+2) + L1^2 / (mu (k+1)))
    quadratic_growth,           // 4 / (mu (k+2) + 4 L1^2 / (mu (k+1)))
    quad_regularized_svm,       // 2 / (lambda (k+2) + 36 lambda / (k+1))
    user_sequence,
  };

  static StepSchedule constant_deterministic(double distance_to_optimum,
                                             std::int64_t horizon);
  // Stochastic variant divides by L0. When l1 > 0 is supplied the
  // construction enforces l1 * alpha < 2 (there is no sensible fallback when
  // the horizon is too short for that, so the schedule refuses to build).
  static StepSchedule constant_stochastic(double distance_to_optimum,
                                          double l0, std::int64_t horizon,
                                          double l1 = 0.0);
  static StepSchedule classic_strongly_convex(double mu);
  static StepSchedule extended_strongly_convex(double mu, double l1);
  static StepSchedule quadratic_growth(double mu, double l1);
  static StepSchedule quad_regularized_svm(double lambda);
  static StepSchedule user_sequence(std::vector<double> alphas);

  double step(std::int64_t k) const;
  std::vector<double> steps(std::int64_t horizon) const;

  Kind kind() const { return kind_; }
  double mu() const { return mu_; }
  double l1() const { return l1_; }
  double lambda() const { return mu_; }
  bool stochastic_constant() const { return stochastic_constant_; }

  std::string describe() const;

 private:
  explicit StepSchedule(Kind kind) : kind_(kind) {}

  Kind kind_;
  double r_ = 0.0;
  double l0_ = 0.0;
  double l1_ = 0.0;
  double mu_ = 0.0;  // also holds lambda for the svm kind
  std::int64_t horizon_ = -1;
  bool stochastic_constant_ = false;
  std::vector<double> alphas_;
};

// Telescoping recurrences the decreasing schedules are built to satisfy:
//   extended strongly convex:  (k+1)/alpha_k = (k+2) (1/alpha_{k+1} - mu)
//   quadratic growth:          (k+1)/alpha_k = (k+2) (1/alpha_{k+1} - mu/2)
// True iff the recurrence holds for all 0 <= k < horizon within 1e-10
// relative. Throws UnsupportedError for other kinds.
bool verify_recurrence(const StepSchedule& schedule, std::int64_t horizon);

// Core of verify_recurrence on an explicit alpha sequence, exposed so tests
// can tamper with individual steps. mu_effective is mu (extended) or mu/2
// (quadratic growth).
bool recurrence_holds(std::span<const double> alphas, double mu_effective,
                      double relative_tolerance = 1e-10);

// L1 alpha_k <= 1 for extended strongly convex, strictly < 1 for quadratic
// growth, over 0 <= k <= horizon.
bool verify_bounded_product(const StepSchedule& schedule, std::int64_t horizon);

}  // namespace subgrad

#endif  // SUBGRAD_SCHEDULE_HPP
