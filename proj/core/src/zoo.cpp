#include "subgrad/zoo.hpp"

#include <cmath>
#include <sstream>

#include "subgrad/errors.hpp"

namespace subgrad {

namespace {

OptimumCertificate origin_certificate(std::size_t d) {
  OptimumCertificate cert;
  cert.x_star = zeros(d);
  cert.f_star = 0.0;
  cert.project_onto_optimum_set = [d](const Vector&) { return zeros(d); };
  return cert;
}

void require_dimension(std::size_t d) {
  if (d == 0) throw InvalidInputError("zoo: dimension must be >= 1");
}

}  // namespace

StochasticOracle deterministic_as_stochastic(SubgradientOracle oracle) {
  StochasticOracle wrapped;
  wrapped.sample_count = 1;
  wrapped.estimator = [oracle = std::move(oracle)](const Vector& x,
                                                   std::uint64_t) {
    return oracle(x);
  };
  return wrapped;
}

Problem make_lipschitz_norm(std::size_t d, double lipschitz) {
  require_dimension(d);
  if (!(lipschitz > 0.0)) throw InvalidInputError("lipschitz: L > 0 required");
  Problem p;
  std::ostringstream name;
  name << "lipschitz(d=" << d << ",L=" << lipschitz << ")";
  p.name = name.str();
  p.dimension = d;
  p.objective = [lipschitz](const Vector& x) { return lipschitz * norm(x); };
  p.oracle = [lipschitz](const Vector& x) {
    const double r = norm(x);
    if (r == 0.0) return zeros(x.size());
    return scaled(x, lipschitz / r);
  };
  p.stochastic_oracle = deterministic_as_stochastic(p.oracle);
  p.certificate = origin_certificate(d);
  p.growth_model = GrowthModel::linear(lipschitz);
  p.second_moment = SecondMomentModel(lipschitz, 0.0);
  return p;
}

Problem make_holder_power(std::size_t d, double smoothness, double exponent) {
  require_dimension(d);
  if (!(smoothness > 0.0)) throw InvalidInputError("holder: L > 0 required");
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidInputError("holder: v must lie in (0, 1]");
  }
  Problem p;
  std::ostringstream name;
  name << "holder(d=" << d << ",L=" << smoothness << ",v=" << exponent << ")";
  p.name = name.str();
  p.dimension = d;
  const double l = smoothness;
  const double v = exponent;
  p.objective = [l, v](const Vector& x) {
    return l * std::pow(norm(x), v + 1.0) / (v + 1.0);
  };
  p.oracle = [l, v](const Vector& x) {
    const double r = norm(x);
    if (r == 0.0) return zeros(x.size());
    return scaled(x, l * std::pow(r, v - 1.0));
  };
  p.stochastic_oracle = deterministic_as_stochastic(p.oracle);
  p.certificate = origin_certificate(d);
  p.growth_model = GrowthModel::power(l, v);
  p.second_moment = SecondMomentModel(l, l * (v + 1.0));
  if (v == 1.0) {
    p.strong_convexity_mu = l;
    p.quadratic_growth_mu = l;
  }
  return p;
}

Problem make_additive_composite(std::size_t d, double smooth_part,
                                double exponent, double lipschitz_part) {
  require_dimension(d);
  if (!(smooth_part > 0.0) || !(lipschitz_part > 0.0)) {
    throw InvalidInputError("composite: constants must be positive");
  }
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidInputError("composite: v must lie in (0, 1]");
  }
  Problem p;
  std::ostringstream name;
  name << "composite(d=" << d << ",Lphi=" << smooth_part << ",v=" << exponent
       << ",Lh=" << lipschitz_part << ")";
  p.name = name.str();
  p.dimension = d;
  const double lphi = smooth_part;
  const double v = exponent;
  const double lh = lipschitz_part;
  p.objective = [lphi, v, lh](const Vector& x) {
    const double r = norm(x);
    return lphi * std::pow(r, v + 1.0) / (v + 1.0) + lh * r;
  };
  p.oracle = [lphi, v, lh](const Vector& x) {
    const double r = norm(x);
    // Both parts minimize at the origin; 0 is a valid subgradient there.
    if (r == 0.0) return zeros(x.size());
    return scaled(x, lphi * std::pow(r, v - 1.0) + lh / r);
  };
  p.stochastic_oracle = deterministic_as_stochastic(p.oracle);
  p.certificate = origin_certificate(d);
  p.growth_model = GrowthModel::composite(lphi, v, lh);
  p.second_moment = SecondMomentModel(
      std::sqrt(2.0 * (lphi * lphi + lh * lh)), 2.0 * lphi * (v + 1.0));
  return p;
}

Problem make_quadratic_growth(std::size_t d, double radius) {
  require_dimension(d);
  if (!(radius > 0.0)) throw InvalidInputError("quadratic-growth: r > 0");
  Problem p;
  std::ostringstream name;
  name << "quadratic-growth(d=" << d << ",r=" << radius << ")";
  p.name = name.str();
  p.dimension = d;
  const FeasibleRegion optimum_set = FeasibleRegion::ball(zeros(d), radius);
  p.objective = [optimum_set](const Vector& x) {
    const double dist = distance(x, optimum_set.project(x));
    return dist * dist;
  };
  p.oracle = [optimum_set](const Vector& x) {
    return scaled(subtract(x, optimum_set.project(x)), 2.0);
  };
  p.stochastic_oracle = deterministic_as_stochastic(p.oracle);
  OptimumCertificate cert;
  cert.x_star = zeros(d);
  cert.f_star = 0.0;
  cert.project_onto_optimum_set = [optimum_set](const Vector& x) {
    return optimum_set.project(x);
  };
  p.certificate = std::move(cert);
  p.quadratic_growth_mu = 2.0;
  p.second_moment = SecondMomentModel(0.0, 4.0);
  p.growth_model = GrowthModel::power(2.0, 1.0);  // (t - r)_+^2 <= t^2
  return p;
}

}  // namespace subgrad
