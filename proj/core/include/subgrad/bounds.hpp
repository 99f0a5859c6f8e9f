#ifndef SUBGRAD_BOUNDS_HPP
#define SUBGRAD_BOUNDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subgrad/growth.hpp"

namespace subgrad {

// Right-hand sides of the convergence statements, keyed by theorem. The
// schedule-dependent ones (T5, T6, QG) take the actual alpha sequence used
// by the run, never a closed-form stand-in.
//
// Remark on asymptotics (not an operation): when the growth envelope has
// D(t)/t bounded near t = 0 — any objective locally Lipschitz around its
// minimizers — the generic envelope bound evaluated at R/sqrt(T+1) shows the
// normalized method's eventual rate is (limsup_{t->0+} D(t)/t + o(1)) * R /
// sqrt(T+1): growth near the minimizer set alone decides the asymptotic
// constant, and steepness far from optimality plays no role. The rate-fit
// helper below exists to observe exactly these regimes empirically.
enum class TheoremId {
  T2,         // D((R^2 + sum a^2) / (2 sum a))
  C2,         // L R^2 / (2 (T+1))
  C3,         // L R^{v+1} / ((v+1) (T+1)^{(v+1)/2})
  C4,         // C3 term + 2 Lh R / sqrt(T+1)
  T3,         // (R^2 + L^2 sum a^2) / (2 sum a)
  T4,         // 2 L^2 / (mu (T+2))
  T5,         // (R^2 + L0^2 sum a^2) / sum a (2 - L1 a)
  T6,         // (2 L0^2 (T+1) + L1^2 R^2 / 2) / (mu sum (k+1)(2 - L1 a))
  T6_simple,  // 4 L0^2 / (mu (T+2)) + L1^2 R^2 / (mu (T+1)(T+2))
  C5,         // 24 L^2 / (lambda (T+2)) + 36 lambda R^2 / ((T+1)(T+2))
  QG,         // (4 L0^2 (T+1) + L1^2 dist0^2) / (mu sum (k+1)(1 - L1 a))
};

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

struct BoundParams {
  double distance_to_optimum = 0.0;  // R = |x0 - x*| (QG: dist(x0, X*))
  std::int64_t horizon = -1;         // T
  double lipschitz = 0.0;            // L (C2/C3: growth constant; T3/T4: oracle bound)
  double holder_exponent = 0.0;      // v
  double smooth_part = 0.0;          // L_phi (C4)
  double lipschitz_part = 0.0;       // L_h (C4)
  double l0 = 0.0;                   // second-moment constants (T5/T6/QG)
  double l1 = 0.0;
  double mu = 0.0;                   // strong convexity / quadratic growth
  double lambda = 0.0;               // regularization weight (C5)
  std::vector<double> alphas;        // actual steps alpha_0..alpha_T
  const GrowthModel* growth = nullptr;  // T2
};

// Shor's hyperplane-distance bound (R^2 + sum a_k^2) / (2 sum a_k).
double shor_rhs(double distance_to_optimum, std::span<const double> alphas);

// Displayed right-hand side of the requested theorem. Missing parameters
// raise ConfigError; a nonpositive averaging denominator (possible only when
// L1 alpha_k leaves the valid range) raises PreconditionError.
double theorem_rhs(TheoremId id, const BoundParams& params);

// Least-squares slope of log(gap) against log(T). Nonpositive gaps are
// dropped; fewer than three surviving points is an error. When the points
// span more than a decade of T only the largest decade enters the fit
// (falling back to the three largest T when the filter leaves fewer than
// three), since the rates under test are asymptotic.
double fit_rate_exponent(std::span<const std::pair<double, double>> gap_series);

}  // namespace subgrad

#endif  // SUBGRAD_BOUNDS_HPP
