#include <doctest.h>

#include <cmath>

#include "subgrad/bounds.hpp"
#include "subgrad/errors.hpp"
#include "subgrad/schedule.hpp"

using namespace subgrad;

TEST_CASE("growth model closed forms") {
  CHECK(growth_eval(GrowthModel::power(2.0, 1.0), 3.0) == 9.0);
  CHECK(growth_eval(GrowthModel::linear(5.0), 0.2) == 1.0);
  CHECK(growth_eval(GrowthModel::composite(1.0, 1.0, 2.0), 1.0) == 4.5);
  CHECK_THROWS_AS(GrowthModel::linear(1.0).eval(-0.5), InvalidInputError);
}

TEST_CASE("growth table interpolates and reports its unbounded tail") {
  const auto table = GrowthModel::table({{0.0, 0.0}, {1.0, 2.0}, {2.0, 6.0}});
  CHECK(*table.eval(0.5) == 1.0);
  CHECK(*table.eval(1.5) == 4.0);
  CHECK(*table.eval(2.0) == 6.0);
  CHECK_FALSE(table.eval(2.5).has_value());
  CHECK(growth_eval(table, 2.5) == std::numeric_limits<double>::infinity());
  CHECK(growth_is_nondecreasing(table, 2.0));
  CHECK_THROWS_AS(GrowthModel::table({{0.0, 1.0}, {1.0, 0.5}}),
                  InvalidInputError);
}

TEST_CASE("growth models are nondecreasing on a sampled grid") {
  for (const auto& model :
       {GrowthModel::linear(2.0), GrowthModel::power(1.0, 0.5),
        GrowthModel::composite(1.0, 1.0, 2.0)}) {
    CHECK(growth_is_nondecreasing(model, 50.0));
  }
}

TEST_CASE("hyperplane-distance bound values") {
  CHECK(shor_rhs(1.0, std::vector<double>{1.0}) == 1.0);
  CHECK(shor_rhs(1.0, std::vector<double>{1.0, 1.0}) == 0.75);
  CHECK_THROWS_AS(shor_rhs(1.0, std::vector<double>{}), ConfigError);
  CHECK_THROWS_AS(shor_rhs(1.0, std::vector<double>{0.0}), ConfigError);
}

TEST_CASE("constant steps collapse the bound to R/sqrt(T+1)") {
  for (double r : {0.1, 1.0, 10.0}) {
    for (std::int64_t horizon : {std::int64_t{0}, std::int64_t{9},
                                 std::int64_t{99}}) {
      const auto alphas =
          StepSchedule::constant_deterministic(r, horizon).steps(horizon);
      const double expected = r / std::sqrt(static_cast<double>(horizon) + 1.0);
      CHECK(shor_rhs(r, alphas) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("theorem displays at pinned parameters") {
  BoundParams p;
  p.distance_to_optimum = 1.0;
  p.horizon = 0;
  p.lipschitz = 1.0;
  CHECK(theorem_rhs(TheoremId::C2, p) == 0.5);

  p.mu = 1.0;
  CHECK(theorem_rhs(TheoremId::T4, p) == 1.0);

  p.l0 = 1.0;
  p.l1 = 0.0;
  CHECK(theorem_rhs(TheoremId::T6_simple, p) == 2.0);

  BoundParams c3;
  c3.distance_to_optimum = 2.0;
  c3.horizon = 99;
  c3.lipschitz = 1.0;
  c3.holder_exponent = 0.5;
  // L R^{1.5} / (1.5 * 100^{0.75})
  CHECK(theorem_rhs(TheoremId::C3, c3) ==
        doctest::Approx(std::pow(2.0, 1.5) / (1.5 * std::pow(100.0, 0.75)))
            .epsilon(1e-15));
}

TEST_CASE("C5 display equals T6-simple under the regularized constants") {
  // With L0^2 = 6 L^2, L1 = 6 lambda, mu = lambda the two formulas coincide.
  const double lambda = 0.1, l_squared = 2.5, r = 1.3;
  BoundParams c5;
  c5.distance_to_optimum = r;
  c5.horizon = 99;
  c5.lambda = lambda;
  c5.lipschitz = std::sqrt(l_squared);
  BoundParams t6;
  t6.distance_to_optimum = r;
  t6.horizon = 99;
  t6.mu = lambda;
  t6.l0 = std::sqrt(6.0 * l_squared);
  t6.l1 = 6.0 * lambda;
  CHECK(theorem_rhs(TheoremId::C5, c5) ==
        doctest::Approx(theorem_rhs(TheoremId::T6_simple, t6))
            .epsilon(1e-12));
}

TEST_CASE("T5 equals T3 on any shared steps when L1 = 0") {
  const auto alphas = StepSchedule::constant_stochastic(1.0, 2.0, 57).steps(57);
  BoundParams p;
  p.distance_to_optimum = 1.0;
  p.horizon = 57;
  p.lipschitz = 2.0;
  p.l0 = 2.0;
  p.l1 = 0.0;
  p.alphas = alphas;
  const double t3 = theorem_rhs(TheoremId::T3, p);
  const double t5 = theorem_rhs(TheoremId::T5, p);
  CHECK(std::fabs(t5 - t3) <= 1e-12 * t3);
}

TEST_CASE("schedule-dependent denominators reject invalid step products") {
  BoundParams p;
  p.distance_to_optimum = 1.0;
  p.horizon = 0;
  p.mu = 1.0;
  p.l0 = 1.0;
  p.l1 = 1.0;
  p.alphas = {1.0};  // L1 alpha = 1: QG denominator (k+1)(1 - 1) = 0
  CHECK_THROWS_AS(theorem_rhs(TheoremId::QG, p), PreconditionError);
  p.alphas = {2.5};  // L1 alpha = 2.5: T5 denominator negative
  CHECK_THROWS_AS(theorem_rhs(TheoremId::T5, p), PreconditionError);
}

TEST_CASE("missing parameters are configuration errors") {
  BoundParams p;
  p.horizon = 10;
  CHECK_THROWS_AS(theorem_rhs(TheoremId::C2, p), ConfigError);  // L missing
  CHECK_THROWS_AS(theorem_rhs(TheoremId::T2, p), ConfigError);  // growth
  BoundParams no_alphas;
  no_alphas.distance_to_optimum = 1.0;
  no_alphas.horizon = 10;
  no_alphas.lipschitz = 1.0;
  CHECK_THROWS_AS(theorem_rhs(TheoremId::T3, no_alphas), ConfigError);
}

TEST_CASE("rate exponent fits exact power laws") {
  const auto series = [](double exponent) {
    std::vector<std::pair<double, double>> s;
    for (double t : {10.0, 100.0, 1000.0}) {
      s.emplace_back(t, 3.7 / std::pow(t, exponent));
    }
    return s;
  };
  CHECK(fit_rate_exponent(series(1.0)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit_rate_exponent(series(0.5)) ==
        doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(fit_rate_exponent(series(0.75)) ==
        doctest::Approx(-0.75).epsilon(1e-12));
}

TEST_CASE("rate exponent drops nonpositive gaps and requires 3 points") {
  std::vector<std::pair<double, double>> s = {
      {10.0, 1.0}, {100.0, 0.0}, {1000.0, -0.1}};
  CHECK_THROWS_AS(fit_rate_exponent(s), ConfigError);
}

TEST_CASE("rate exponent fits only the largest decade when it can") {
  // Garbage plateau at small T must not contaminate the asymptotic fit.
  std::vector<std::pair<double, double>> s;
  for (double t : {1.0, 2.0, 5.0, 10.0}) s.emplace_back(t, 1.0);
  for (double t : {100.0, 200.0, 500.0, 1000.0}) s.emplace_back(t, 1.0 / t);
  CHECK(fit_rate_exponent(s) == doctest::Approx(-1.0).epsilon(1e-12));
}
