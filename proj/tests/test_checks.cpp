#include <doctest.h>

#include <cmath>

#include "subgrad/checks.hpp"
#include "subgrad/errors.hpp"
#include "subgrad/report.hpp"
#include "subgrad/suites.hpp"
#include "subgrad/svm.hpp"
#include "subgrad/zoo.hpp"

using namespace subgrad;

TEST_CASE("per-step inequality: hand-checked equality on the quadratic") {
  // Unconstrained single-sample oracle: both sides equal 0.25 exactly.
  Problem quad = make_holder_power(1, 1.0, 1.0);
  const Lemma3Result step = check_lemma3_step(quad, {1.0}, {0.0}, 0.5);
  CHECK(step.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(step.rhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(step.pass);
}

TEST_CASE("per-step inequality: vanishing step recovers the distance") {
  Problem quad = make_holder_power(1, 1.0, 1.0);
  const Lemma3Result step = check_lemma3_step(quad, {2.0}, {0.5}, 1e-12);
  CHECK(step.lhs == doctest::Approx(2.25).epsilon(1e-9));
  CHECK(step.rhs == doctest::Approx(2.25).epsilon(1e-9));
  CHECK(step.pass);
}

TEST_CASE("per-step inequality holds at random svm triples") {
  Problem svm = make_svm(make_synthetic_svm(30, 4, 0.2, 13));
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Vector x(4), y(4);
    for (auto& v : x) v = 4.0 * (2.0 * rng.uniform01() - 1.0);
    for (auto& v : y) v = 4.0 * (2.0 * rng.uniform01() - 1.0);
    const double alpha = 0.01 + rng.uniform01();
    const Lemma3Result step = check_lemma3_step(svm, x, y, alpha);
    CHECK(step.pass);
  }
}

TEST_CASE("per-step inequality is strict under projection") {
  // Constrained region: the projection contracts and the inequality gains
  // real slack for steps pointing outward.
  Problem quad = constrained_to(make_holder_power(1, 1.0, 1.0),
                                FeasibleRegion::box({-0.4}, {0.4}));
  const Lemma3Result step = check_lemma3_step(quad, {0.4}, {0.0}, 4.0);
  CHECK(step.pass);
  CHECK(step.lhs < step.rhs);
}

TEST_CASE("per-step inequality needs an enumerable oracle") {
  Problem p = make_holder_power(1, 1.0, 1.0);
  StochasticOracle custom;
  custom.sample_count = 0;
  custom.estimator = [](const Vector& x, std::uint64_t) { return x; };
  p.stochastic_oracle = custom;
  CHECK_THROWS_AS(check_lemma3_step(p, {1.0}, {0.0}, 0.5), UnsupportedError);
}

TEST_CASE("hyperplane guarantee: one-step equality case") {
  Problem p = make_lipschitz_norm(1, 1.0);
  const auto schedule = StepSchedule::user_sequence({1.0});
  RunOptions options;
  options.start = Vector{1.0};
  const RunTrace trace = run_deterministic(p, schedule, 0, options);
  const CheckRecord record =
      check_shor(p, trace, 1.0, schedule.steps(0));
  CHECK(record.pass);
  CHECK(record.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(record.rhs == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hyperplane guarantee: termination counts as success") {
  Problem p = make_holder_power(1, 1.0, 1.0);
  const auto schedule = StepSchedule::constant_deterministic(1.0, 3);
  RunOptions options;
  options.start = Vector{1.0};
  const RunTrace trace = run_deterministic(p, schedule, 3, options);
  REQUIRE(trace.terminated_at_minimizer.has_value());
  const CheckRecord record = check_shor(p, trace, 1.0, schedule.steps(3));
  CHECK(record.pass);
}

TEST_CASE("deterministic rate checks at degenerate horizons") {
  // T = 0 with alpha_0 = R: the envelope at R dominates the start gap.
  Problem p = make_lipschitz_norm(2, 2.0);
  const auto schedule = StepSchedule::user_sequence({1.0});
  RunOptions options;
  options.start = Vector{0.6, 0.8};
  const RunTrace trace = run_deterministic(p, schedule, 0, options);
  const CheckRecord record =
      check_deterministic_rate(p, trace, TheoremId::T2, schedule.steps(0));
  CHECK(record.pass);
  CHECK(record.lhs == doctest::Approx(2.0).epsilon(1e-12));  // f(x0) - f*
  CHECK(record.rhs >= record.lhs);
}

TEST_CASE("rate checks demand the matching growth model") {
  Problem lipschitz = make_lipschitz_norm(2, 1.0);  // linear model
  const auto schedule = StepSchedule::constant_deterministic(1.0, 5);
  RunOptions options;
  options.start = Vector{1.0, 0.0};
  const RunTrace trace = run_deterministic(lipschitz, schedule, 5, options);
  CHECK_THROWS_AS(check_deterministic_rate(lipschitz, trace, TheoremId::C2,
                                           schedule.steps(5)),
                  ConfigError);
  CHECK_THROWS_AS(check_deterministic_rate(lipschitz, trace, TheoremId::C4,
                                           schedule.steps(5)),
                  ConfigError);
}

TEST_CASE("stochastic rate hypothesis validation names the gap") {
  Problem qg = make_quadratic_growth(2, 1.0);  // no strong convexity
  const auto schedule = StepSchedule::classic_strongly_convex(1.0);
  StochasticRateSpec spec;
  spec.theorem = TheoremId::T4;
  spec.horizon = 10;
  spec.num_seeds = 2;
  CHECK_THROWS_WITH_AS(check_stochastic_rate(qg, schedule, spec),
                       doctest::Contains("strong_convexity_mu"), ConfigError);

  Problem svm = make_svm(make_synthetic_svm(10, 2, 0.5, 2));
  OptimumCertificate cert;
  cert.x_star = zeros(2);
  cert.f_star = 0.0;
  svm.certificate = cert;  // placeholder; hypothesis check fires first
  StochasticRateSpec t3;
  t3.theorem = TheoremId::T3;
  t3.horizon = 10;
  t3.num_seeds = 2;
  CHECK_THROWS_WITH_AS(
      check_stochastic_rate(svm, StepSchedule::quad_regularized_svm(0.5), t3),
      doctest::Contains("L1 = 0"), ConfigError);
}

TEST_CASE("T5 with a degenerate oracle reduces to a hard inequality") {
  // Single-sample oracle: SE = 0 and the theorem becomes sure-thing.
  Problem quad = make_holder_power(2, 1.0, 1.0);  // (L0, L1) = (1, 2)
  const auto schedule =
      StepSchedule::constant_stochastic(1.0, quad.second_moment->l0, 1000,
                                        quad.second_moment->l1);
  StochasticRateSpec spec;
  spec.theorem = TheoremId::T5;
  spec.horizon = 1000;
  spec.num_seeds = 4;
  spec.start = Vector{1.0, 0.0};
  const StochasticRateResult res =
      check_stochastic_rate(quad, schedule, spec);
  CHECK(res.standard_error == 0.0);
  CHECK(res.pass);
}

TEST_CASE("T5 and T3 rate checks agree to rounding when L1 = 0") {
  Problem p = make_lipschitz_norm(2, 2.0);  // second moment (2, 0)
  const auto schedule = StepSchedule::constant_stochastic(1.0, 2.0, 200);
  StochasticRateSpec spec;
  spec.horizon = 200;
  spec.num_seeds = 4;
  spec.start = Vector{0.6, 0.8};
  spec.theorem = TheoremId::T3;
  const auto t3 = check_stochastic_rate(p, schedule, spec);
  spec.theorem = TheoremId::T5;
  spec.rule = AveragingRule{AverageKind::alpha_weighted, 0.0};
  const auto t5 = check_stochastic_rate(p, schedule, spec);
  CHECK(std::fabs(t5.bound - t3.bound) <= 1e-12 * t3.bound);
  CHECK(t3.pass);
  CHECK(t5.pass);
}

TEST_CASE("quadratic upper-bound characterization on a grid") {
  Problem quad = make_holder_power(1, 1.0, 1.0);
  const auto grid = grid_1d(-2.0, 2.0, 50);
  Prop1Options options;
  options.l0 = 0.0;
  options.l1 = 2.0;
  const CheckRecord forward = check_prop1_forward(quad, grid, options);
  CHECK(forward.pass);
  CHECK(forward.note.empty());  // certificate inf, not approximate
  const CheckRecord reverse = check_prop1_reverse(quad, grid, options);
  CHECK(reverse.pass);
  // Identity case: |g(x)|^2 = 2 f(x) exactly.
  CHECK(reverse.margin >= -1e-15);

  // Hand equality at (x, y) = (1, 2): bound value 2 = f(2).
  const double upper = quad.objective({1.0}) + 0.5 * 1.0 +
                       1.0 * std::sqrt(2.0 * quad.objective({1.0}));
  CHECK(std::fabs(upper - 2.0) <= 1e-12);
}

TEST_CASE("grid-estimated infimum marks the record approximate") {
  Problem quad = make_holder_power(1, 1.0, 1.0);
  quad.certificate.reset();
  const auto grid = grid_1d(0.5, 2.0, 20);  // minimizer outside the box
  Prop1Options options;
  options.l0 = 0.0;
  options.l1 = 2.0;
  const CheckRecord record = check_prop1_reverse(quad, grid, options);
  CHECK(record.note == "approximate-inf");
}

TEST_CASE("declared models certify on sampled clouds") {
  for (const Problem& problem :
       {make_lipschitz_norm(3, 2.0), make_holder_power(2, 1.0, 0.5),
        make_additive_composite(2, 1.0, 1.0, 2.0),
        make_quadratic_growth(3, 1.0)}) {
    CAPTURE(problem.name);
    CHECK(check_growth_model(problem, 100, 12).pass);
    CHECK(check_second_moment_model(problem, 100, 13).pass);
  }
}

TEST_CASE("sampling helpers behave") {
  const auto grid = grid_1d(-1.0, 1.0, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == Vector{-1.0});
  CHECK(grid.back() == Vector{1.0});

  Problem ball = constrained_to(make_holder_power(2, 1.0, 1.0),
                                FeasibleRegion::ball(zeros(2), 1.5));
  for (const Vector& x : feasible_cloud(ball, 100, 3)) {
    CHECK(ball.region.contains(x, 1e-9));
  }
}

TEST_CASE("digest is a stable fingerprint") {
  CHECK(params_digest("") == "cbf29ce484222325");
  CHECK(params_digest("a") != params_digest("b"));
  CHECK(params_digest("same") == params_digest("same"));
}

TEST_CASE("report records serialize with the full field set") {
  const CheckRecord record =
      make_record("demo-check", "demo|params", 1.0, 2.0, true, "fine");
  const std::string json = record_to_json(record);
  for (const char* field :
       {"\"check_id\":\"demo-check\"", "\"params_digest\":", "\"lhs\":1.0",
        "\"rhs\":2.0", "\"margin\":1.0", "\"pass\":true",
        "\"note\":\"fine\""}) {
    CAPTURE(field);
    CHECK(json.find(field) != std::string::npos);
  }
}
