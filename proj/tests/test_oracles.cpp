#include <doctest.h>

#include <cmath>

#include "subgrad/errors.hpp"
#include "subgrad/kahan.hpp"
#include "subgrad/oracles.hpp"

using namespace subgrad;

namespace {

double abs_objective(const Vector& x) { return std::fabs(x[0]); }

}  // namespace

TEST_CASE("subgradient inequality check on |x|") {
  // g = 1 at x = 1
  CHECK(subgradient_inequality_check(abs_objective, {1.0}, {1.0},
                                     std::vector<Vector>{{-2.0}, {0.0}, {3.0}}));
  // 0.5 lies in the subdifferential at the kink
  CHECK(subgradient_inequality_check(abs_objective, {0.0}, {0.5},
                                     std::vector<Vector>{{-1.0}, {1.0}}));
  // g = 2 is too steep: the violation shows at y = 1 (f(1) = 1 < 2*1),
  // while y = -1 alone cannot expose it (1 >= -2).
  CHECK_FALSE(subgradient_inequality_check(abs_objective, {0.0}, {2.0},
                                           std::vector<Vector>{{1.0}}));
  CHECK(subgradient_inequality_check(abs_objective, {0.0}, {2.0},
                                     std::vector<Vector>{{-1.0}}));
}

TEST_CASE("exact expectation over finite uniform spaces") {
  StochasticOracle oracle;
  oracle.sample_count = 2;
  oracle.estimator = [](const Vector&, std::uint64_t i) {
    return i == 0 ? Vector{1.0, 0.0} : Vector{0.0, 1.0};
  };
  CHECK(exact_expectation(oracle, {0.0, 0.0}, [](const Vector& g) {
          return squared_norm(g);
        }) == 1.0);

  const Vector mean = exact_expected_estimate(oracle, {0.0, 0.0});
  CHECK(mean == Vector{0.5, 0.5});

  StochasticOracle single;
  single.sample_count = 1;
  single.estimator = [](const Vector&, std::uint64_t) { return Vector{7.5}; };
  CHECK(exact_expectation(single, {0.0}, [](const Vector& g) {
          return g[0];
        }) == 7.5);

  StochasticOracle three;
  three.sample_count = 3;
  three.estimator = [](const Vector&, std::uint64_t i) {
    return Vector{static_cast<double>(i) + 1.0};
  };
  CHECK(exact_expectation(three, {0.0}, [](const Vector& g) {
          return g[0];
        }) == 2.0);
}

TEST_CASE("exact expectation refuses custom sample spaces") {
  StochasticOracle custom;
  custom.sample_count = 0;
  custom.estimator = [](const Vector&, std::uint64_t) { return Vector{0.0}; };
  CHECK_THROWS_AS(
      exact_expectation(custom, {0.0}, [](const Vector&) { return 0.0; }),
      UnsupportedError);
  CHECK_THROWS_AS(exact_expected_estimate(custom, {0.0}), UnsupportedError);
}

TEST_CASE("compensated summation holds up where naive summation drifts") {
  // Tiny terms under a unit head: naive addition rounds every one of them
  // away; the compensated sum keeps them all.
  KahanSum sum;
  double naive = 1.0;
  sum.add(1.0);
  for (int i = 0; i < 10000; ++i) {
    sum.add(1e-17);
    naive += 1e-17;
  }
  CHECK(naive == 1.0);
  CHECK(sum.value() == doctest::Approx(1.0 + 1e-13).epsilon(1e-15));
}

TEST_CASE("rng streams are reproducible and bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.uniform_index(13) < 13);
    const double u = Rng(i).uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
