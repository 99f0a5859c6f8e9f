#include <doctest.h>

#include <cmath>

#include "subgrad/errors.hpp"
#include "subgrad/schedule.hpp"

using namespace subgrad;

TEST_CASE("step formulas at pinned points") {
  const auto constant = StepSchedule::constant_deterministic(1.0, 3);
  for (std::int64_t k = 0; k <= 3; ++k) CHECK(constant.step(k) == 0.5);

  CHECK(StepSchedule::classic_strongly_convex(2.0).step(0) == 0.5);
  CHECK(StepSchedule::extended_strongly_convex(1.0, 0.0).step(0) == 1.0);
  CHECK(StepSchedule::quad_regularized_svm(1.0).step(0) ==
        doctest::Approx(2.0 / 38.0).epsilon(1e-15));
  CHECK(StepSchedule::quadratic_growth(1.0, 1.0).step(0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // Stochastic constant divides by L0.
  const auto stochastic = StepSchedule::constant_stochastic(1.0, 2.0, 3);
  CHECK(stochastic.step(1) == 0.25);
}

TEST_CASE("telescoping recurrence holds and tampering is caught") {
  CHECK(verify_recurrence(StepSchedule::extended_strongly_convex(1.0, 2.0),
                          1000));
  CHECK(verify_recurrence(StepSchedule::quadratic_growth(3.0, 0.5), 1000));

  auto alphas = StepSchedule::extended_strongly_convex(1.0, 2.0).steps(100);
  CHECK(recurrence_holds(alphas, 1.0));
  alphas[5] += 1e-3;
  CHECK_FALSE(recurrence_holds(alphas, 1.0));

  CHECK_THROWS_AS(
      verify_recurrence(StepSchedule::classic_strongly_convex(1.0), 10),
      UnsupportedError);
}

TEST_CASE("bounded step products") {
  CHECK(verify_bounded_product(StepSchedule::extended_strongly_convex(1.0, 10.0),
                               10000));
  CHECK(verify_bounded_product(StepSchedule::extended_strongly_convex(1.0, 0.0),
                               10000));
  CHECK(verify_bounded_product(StepSchedule::quadratic_growth(0.1, 5.0),
                               10000));

  // Independent sweep of the inequalities themselves.
  const auto extended = StepSchedule::extended_strongly_convex(2.0, 7.0);
  const auto growth = StepSchedule::quadratic_growth(2.0, 7.0);
  for (std::int64_t k = 0; k <= 10000; ++k) {
    CHECK(7.0 * extended.step(k) <= 1.0 + 1e-12);
    CHECK(7.0 * growth.step(k) < 1.0);
  }
}

TEST_CASE("extended schedule reduces to the classic one at L1 = 0") {
  for (double mu : {0.1, 1.0, 10.0}) {
    const auto extended = StepSchedule::extended_strongly_convex(mu, 0.0);
    const auto classic = StepSchedule::classic_strongly_convex(mu);
    for (std::int64_t k = 0; k <= 10000; ++k) {
      const double a = extended.step(k);
      const double b = classic.step(k);
      CHECK(std::fabs(a - b) <= 1e-15 * b);
    }
  }
}

TEST_CASE("monotonicity of the decreasing schedules") {
  const auto classic = StepSchedule::classic_strongly_convex(0.7);
  for (std::int64_t k = 0; k < 1000; ++k) {
    CHECK(classic.step(k + 1) < classic.step(k));
  }

  // The svm schedule's denominator (k+2) + 36/(k+1) is minimized at k = 5:
  // the sequence rises until then and decreases afterwards.
  const auto svm = StepSchedule::quad_regularized_svm(1.0);
  CHECK(svm.step(1) < svm.step(2));  // still increasing here
  CHECK(svm.step(4) < svm.step(5));
  for (std::int64_t k = 5; k < 1000; ++k) {
    CHECK(svm.step(k + 1) < svm.step(k));
  }
}

TEST_CASE("all schedules emit positive steps") {
  const std::vector<StepSchedule> schedules = {
      StepSchedule::constant_deterministic(2.0, 50),
      StepSchedule::constant_stochastic(2.0, 3.0, 50),
      StepSchedule::classic_strongly_convex(0.5),
      StepSchedule::extended_strongly_convex(0.5, 4.0),
      StepSchedule::quadratic_growth(0.5, 4.0),
      StepSchedule::quad_regularized_svm(0.25),
      StepSchedule::user_sequence({0.5, 0.25, 0.125}),
  };
  for (const auto& schedule : schedules) {
    const std::int64_t horizon =
        schedule.kind() == StepSchedule::Kind::user_sequence ? 2 : 50;
    for (std::int64_t k = 0; k <= horizon; ++k) {
      CHECK(schedule.step(k) > 0.0);
    }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(StepSchedule::classic_strongly_convex(0.0), ConfigError);
  CHECK_THROWS_AS(StepSchedule::constant_deterministic(-1.0, 10), ConfigError);
  CHECK_THROWS_AS(StepSchedule::user_sequence({}), ConfigError);
  CHECK_THROWS_AS(StepSchedule::user_sequence({0.5, 0.0}), ConfigError);
  CHECK_THROWS_AS(StepSchedule::user_sequence({0.5}).step(1), ConfigError);

  // Horizon too short for L1 alpha < 2: refuse to build.
  CHECK_THROWS_AS(StepSchedule::constant_stochastic(10.0, 0.1, 0, 10.0),
                  ConfigError);
  // Long enough horizon is accepted.
  CHECK_NOTHROW(StepSchedule::constant_stochastic(10.0, 0.1, 1000000, 10.0));
}
