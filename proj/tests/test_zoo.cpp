#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "subgrad/certify.hpp"
#include "subgrad/errors.hpp"
#include "subgrad/rng.hpp"
#include "subgrad/suites.hpp"
#include "subgrad/svm.hpp"
#include "subgrad/zoo.hpp"

using namespace subgrad;

namespace {

Vector random_feasible(const Problem& problem, Rng& rng, double scale) {
  Vector x(problem.dimension);
  for (auto& v : x) v = scale * (2.0 * rng.uniform01() - 1.0);
  return problem.region.project(x);
}

std::vector<Vector> probe_points(const Problem& problem, Rng& rng,
                                 std::size_t count, double scale) {
  std::vector<Vector> probes;
  probes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    probes.push_back(random_feasible(problem, rng, scale));
  }
  return probes;
}

std::vector<Problem> all_zoo_problems() {
  return {
      make_lipschitz_norm(3, 2.0),
      make_holder_power(2, 1.0, 1.0),
      make_holder_power(2, 1.0, 0.5),
      make_additive_composite(2, 1.0, 1.0, 2.0),
      make_quadratic_growth(3, 1.0),
      make_svm(make_synthetic_svm(20, 3, 0.5, 3)),
  };
}

std::string write_temp_csv(const char* name, const char* contents) {
  std::string path = std::string("./") + name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("norm objective values and subgradients") {
  Problem p = make_lipschitz_norm(1, 1.0);
  CHECK(p.objective({2.0}) == 2.0);
  CHECK(p.oracle({2.0}) == Vector{1.0});
  CHECK(p.oracle({0.0}) == Vector{0.0});  // valid subgradient, terminal
  // Linear envelope is tight on rays.
  Problem p3 = make_lipschitz_norm(3, 2.0);
  const Vector x{1.0, -2.0, 2.0};
  CHECK(p3.objective(x) ==
        doctest::Approx(growth_eval(*p3.growth_model, norm(x)))
            .epsilon(1e-15));
}

TEST_CASE("holder power family") {
  Problem quad = make_holder_power(2, 1.0, 1.0);
  CHECK(quad.objective({3.0, 4.0}) == 12.5);
  CHECK(quad.oracle({3.0, 4.0}) == Vector{3.0, 4.0});
  CHECK(*quad.strong_convexity_mu == 1.0);

  Problem half = make_holder_power(1, 1.0, 0.5);
  CHECK(half.objective({4.0}) == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(half.strong_convexity_mu.has_value());

  // Envelope equality everywhere (the objective is radial).
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const Vector x = random_feasible(half, rng, 3.0);
    CHECK(half.objective(x) ==
          doctest::Approx(growth_eval(*half.growth_model, norm(x)))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_holder_power(2, 1.0, 1.5), InvalidInputError);
  CHECK_THROWS_AS(make_holder_power(0, 1.0, 1.0), InvalidInputError);
}

TEST_CASE("additive composite family") {
  Problem p = make_additive_composite(1, 1.0, 1.0, 2.0);
  CHECK(p.objective({1.0}) == 2.5);
  CHECK(p.oracle({1.0}) == Vector{3.0});
  CHECK(p.oracle({0.0}) == Vector{0.0});

  // Envelope check: f(x) - f* <= |x|^2/2 + 4|x| on a grid.
  for (double x = -3.0; x <= 3.0; x += 0.0625) {
    CHECK(p.objective({x}) <= x * x / 2.0 + 4.0 * std::fabs(x) + 1e-12);
  }
}

TEST_CASE("quadratic growth family") {
  Problem p = make_quadratic_growth(1, 1.0);
  CHECK(p.objective({3.0}) == 4.0);
  CHECK(p.oracle({3.0}) == Vector{4.0});
  CHECK(p.distance_to_optimum_set({3.0}) == 2.0);
  CHECK(p.objective({0.5}) == 0.0);
  CHECK(p.oracle({0.5}) == Vector{0.0});

  // |grad f|^2 = 4 (f - f*) exactly.
  Problem p3 = make_quadratic_growth(3, 1.0);
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Vector x = random_feasible(p3, rng, 4.0);
    const double lhs = squared_norm(p3.oracle(x));
    const double rhs = 4.0 * (p3.objective(x) - 0.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("quadratic growth is not strongly convex for any tested modulus") {
  Problem p = make_quadratic_growth(2, 1.0);
  // Two minimizers inside the optimum set break the strong convexity
  // inequality f(y) >= f(x) + g.(y-x) + mu/2 |y-x|^2 for every mu > 0.
  const Vector x{0.5, 0.0}, y{-0.5, 0.0};
  const Vector g = p.oracle(x);
  CHECK(g == Vector{0.0, 0.0});
  for (double mu : {1e-3, 1e-2, 0.1}) {
    const double rhs = p.objective(x) + dot(g, subtract(y, x)) +
                       mu / 2.0 * squared_norm(subtract(y, x));
    CHECK(p.objective(y) < rhs);
  }
}

TEST_CASE("every zoo oracle output is a subgradient at sampled points") {
  Rng rng(17);
  for (const Problem& problem : all_zoo_problems()) {
    CAPTURE(problem.name);
    const auto probes = probe_points(problem, rng, 100, 3.0);
    for (int i = 0; i < 10; ++i) {
      const Vector x = random_feasible(problem, rng, 3.0);
      CHECK(subgradient_inequality_check(problem.objective, x,
                                         problem.oracle(x), probes));
    }
  }
}

TEST_CASE("finite-sum oracles are unbiased subgradient estimators") {
  Rng rng(29);
  for (const Problem& problem : all_zoo_problems()) {
    CAPTURE(problem.name);
    REQUIRE(problem.stochastic_oracle.has_value());
    const auto probes = probe_points(problem, rng, 100, 3.0);
    for (int i = 0; i < 10; ++i) {
      const Vector x = random_feasible(problem, rng, 3.0);
      const Vector mean = exact_expected_estimate(*problem.stochastic_oracle, x);
      CHECK(subgradient_inequality_check(problem.objective, x, mean, probes));
    }
  }
}

TEST_CASE("svm instance basics") {
  const SvmInstance inst({{1.0, 0.0}, {0.0, 2.0}}, {1, -1}, 0.5);
  CHECK(inst.mean_squared_feature_norm() == 2.5);

  Problem p = make_svm(SvmInstance({{1.0}}, {1}, 1.0));
  CHECK(p.objective({0.0}) == 1.0);  // hinge 1 + regularizer 0
  // Margin 1 - x >= 0 at x = 0: estimator returns -y w + lambda x = -1.
  CHECK(p.stochastic_oracle->estimator({0.0}, 0) == Vector{-1.0});
  CHECK(*p.strong_convexity_mu == 1.0);
  CHECK(p.second_moment->l0 == doctest::Approx(std::sqrt(6.0)));
  CHECK(p.second_moment->l1 == 6.0);
}

TEST_CASE("svm construction rejects malformed instances") {
  CHECK_THROWS_AS(SvmInstance({}, {}, 1.0), InvalidInputError);
  CHECK_THROWS_AS(SvmInstance({{1.0}}, {2}, 1.0), InvalidInputError);
  CHECK_THROWS_AS(SvmInstance({{1.0}, {1.0, 2.0}}, {1, -1}, 1.0),
                  InvalidInputError);
  CHECK_THROWS_AS(SvmInstance({{1.0}}, {1}, 0.0), InvalidInputError);
}

TEST_CASE("synthetic svm generation is reproducible") {
  const SvmInstance a = make_synthetic_svm(50, 5, 0.1, 7);
  const SvmInstance b = make_synthetic_svm(50, 5, 0.1, 7);
  CHECK(a.sample_count() == 50);
  CHECK(a.dimension() == 5);
  CHECK(a.features() == b.features());
  CHECK(a.labels() == b.labels());
  const SvmInstance c = make_synthetic_svm(50, 5, 0.1, 8);
  CHECK(a.features() != c.features());
}

TEST_CASE("svm csv ingestion") {
  const std::string good =
      write_temp_csv("svm_good.csv", "1,0.5,2.0\n-1,1.0,0.0\n");
  const SvmInstance inst = load_svm_csv(good, 0.5);
  CHECK(inst.sample_count() == 2);
  CHECK(inst.dimension() == 2);
  CHECK(inst.labels() == std::vector<int>{1, -1});

  const std::string crlf =
      write_temp_csv("svm_crlf.csv", "1,0.5\r\n-1,1.0\r\n");
  CHECK(load_svm_csv(crlf, 1.0).sample_count() == 2);

  const std::string bad_label = write_temp_csv("svm_badlabel.csv", "2,1.0\n");
  CHECK_THROWS_WITH_AS(load_svm_csv(bad_label, 1.0),
                       doctest::Contains("line 1"), InvalidInputError);

  const std::string mixed =
      write_temp_csv("svm_mixed.csv", "1,1.0,2.0\n-1,1.0\n");
  CHECK_THROWS_WITH_AS(load_svm_csv(mixed, 1.0), doctest::Contains("line 2"),
                       InvalidInputError);

  const std::string empty = write_temp_csv("svm_empty.csv", "");
  CHECK_THROWS_AS(load_svm_csv(empty, 1.0), InvalidInputError);

  const std::string garbled = write_temp_csv("svm_garbled.csv", "1,abc\n");
  CHECK_THROWS_WITH_AS(load_svm_csv(garbled, 1.0), doctest::Contains("line 1"),
                       InvalidInputError);
}

TEST_CASE("bisection certifies the 1-d hinge plus quadratic") {
  // f(x) = max(0, 1-x) + x^2/2 minimizes at the kink x = 1 with f* = 0.5.
  Problem p = make_svm(SvmInstance({{1.0}}, {1}, 1.0));
  const OptimumCertificate cert =
      certify_optimum(p, CertifyMethod::bisection_1d, 200);
  CHECK_FALSE(cert.low_confidence);
  CHECK(cert.f_star == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(cert.x_star[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.method == "bisection-1d");
}

TEST_CASE("bisection certifies a smooth quadratic and boundary minimizers") {
  Problem quad = make_holder_power(1, 1.0, 1.0);
  quad.certificate.reset();
  const OptimumCertificate cert =
      certify_optimum(quad, CertifyMethod::bisection_1d, 200);
  CHECK(std::fabs(cert.x_star[0]) <= 1e-9);
  CHECK(cert.f_star <= 1e-18);

  // On [2, 5] the quadratic's minimizer sits on the left boundary.
  Problem shifted;
  shifted.name = "quadratic-on-interval";
  shifted.dimension = 1;
  shifted.objective = [](const Vector& x) { return 0.5 * x[0] * x[0]; };
  shifted.oracle = [](const Vector& x) { return Vector{x[0]}; };
  shifted.region = FeasibleRegion::box({2.0}, {5.0});
  const OptimumCertificate boundary =
      certify_optimum(shifted, CertifyMethod::bisection_1d, 200);
  CHECK(boundary.x_star[0] == 2.0);
  CHECK(boundary.f_star == 2.0);
}

TEST_CASE("zero budget long-run certificates are low confidence") {
  Problem p = make_svm(make_synthetic_svm(10, 2, 0.5, 1));
  const OptimumCertificate cert =
      certify_optimum(p, CertifyMethod::long_run, 0);
  CHECK(cert.low_confidence);
}

TEST_CASE("long-run certification closes the duality gap on the svm") {
  const Problem svm = certified_synthetic_svm(7, 100000);
  REQUIRE(svm.certificate.has_value());
  CHECK(svm.certificate->residual <= 1e-10);
  CHECK_FALSE(svm.certificate->low_confidence);
  CHECK(svm.objective(svm.certificate->x_star) ==
        doctest::Approx(svm.certificate->f_star).epsilon(1e-12));
  // No feasible point should beat the certified value by more than the
  // residual: spot-check with a local perturbation sweep.
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Vector x = svm.certificate->x_star;
    for (auto& v : x) v += 0.02 * (2.0 * rng.uniform01() - 1.0);
    CHECK(svm.objective(x) >=
          svm.certificate->f_star - svm.certificate->residual - 1e-12);
  }
}

TEST_CASE("long-run without an exact certifier reports a residual estimate") {
  Problem quad = make_holder_power(2, 1.0, 1.0);
  quad.certificate.reset();
  CertifyOptions options;
  options.start = Vector{1.0, -0.5};
  const OptimumCertificate cert =
      certify_optimum(quad, CertifyMethod::long_run, 10000, options);
  CHECK(cert.f_star <= 1e-6);
  CHECK(cert.residual <= 1e-6);
  CHECK_FALSE(cert.low_confidence);
}

TEST_CASE("certificates are internally consistent") {
  Rng rng(41);
  for (const Problem& problem : all_zoo_problems()) {
    if (!problem.certificate) continue;
    CAPTURE(problem.name);
    const auto& cert = *problem.certificate;
    CHECK(problem.region.contains(cert.x_star, 1e-9));
    CHECK(std::fabs(problem.objective(cert.x_star) - cert.f_star) <=
          1e-12 * (1.0 + std::fabs(cert.f_star)));
    if (cert.project_onto_optimum_set) {
      for (int i = 0; i < 50; ++i) {
        const Vector x = random_feasible(problem, rng, 4.0);
        const Vector p = cert.project_onto_optimum_set(x);
        CHECK(problem.region.contains(p, 1e-9));
        CHECK(std::fabs(problem.objective(p) - cert.f_star) <=
              1e-12 * (1.0 + std::fabs(cert.f_star)));
      }
    }
  }
}

TEST_CASE("constraining a problem keeps the certificate feasible") {
  CHECK_THROWS_AS(
      constrained_to(make_holder_power(2, 1.0, 1.0),
                     FeasibleRegion::box({1.0, 1.0}, {2.0, 2.0})),
      ConfigError);
  const Problem ok = constrained_to(make_holder_power(2, 1.0, 1.0),
                                    FeasibleRegion::ball(zeros(2), 2.0));
  CHECK(ok.region.kind() == FeasibleRegion::Kind::ball);
}
