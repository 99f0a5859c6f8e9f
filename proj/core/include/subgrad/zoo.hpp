#ifndef SUBGRAD_ZOO_HPP
#define SUBGRAD_ZOO_HPP

#include <cstddef>

#include "subgrad/problem.hpp"

namespace subgrad {

// Test-problem constructors, one per problem family the rate theory covers.
// Each instance ships its optimum certificate, growth model and second-moment
// constants so the verification sweeps can run unassisted.

// f(x) = L |x|_2. Euclidean Lipschitz constant exactly L, growth model
// linear(L) tight on rays, second moment (L, 0).
Problem make_lipschitz_norm(std::size_t d, double lipschitz);

// f(x) = L |x|^{v+1} / (v+1) for v in (0, 1]: the gradient is (L,v)-Holder.
// Growth model power(L, v) with equality on rays; second moment
// (L, L(v+1)). For v = 1 the instance is L-strongly convex and declares it.
Problem make_holder_power(std::size_t d, double smoothness, double exponent);

// f(x) = L_phi |x|^{v+1}/(v+1) + L_h |x|: smooth part plus a nonsmooth
// Lipschitz part sharing the minimizer. Growth model
// composite(L_phi, v, L_h); second moment (sqrt(2 (L_phi^2 + L_h^2)),
// 2 L_phi (v+1)).
Problem make_additive_composite(std::size_t d, double smooth_part,
                                double exponent, double lipschitz_part);

// f(x) = dist(x, ball(0, r))^2: 2-quadratic growth with minimizer set
// X* = ball(0, r), not strongly convex for any modulus. The gradient
// identity |grad f|^2 = 4 (f - f*) holds exactly, so the second-moment
// model is (0, 4).
Problem make_quadratic_growth(std::size_t d, double radius);

// Degenerate single-sample stochastic oracle wrapping a deterministic one;
// lets every instance run through the stochastic iteration and makes the
// expectation checks exact.
StochasticOracle deterministic_as_stochastic(SubgradientOracle oracle);

}  // namespace subgrad

#endif  // SUBGRAD_ZOO_HPP
