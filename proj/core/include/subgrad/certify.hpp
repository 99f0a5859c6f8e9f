#ifndef SUBGRAD_CERTIFY_HPP
#define SUBGRAD_CERTIFY_HPP

#include <cstdint>
#include <optional>

#include "subgrad/problem.hpp"

namespace subgrad {

enum class CertifyMethod {
  // Bracket a sign change of the scalar subdifferential to width 1e-12.
  // One-dimensional problems only; boundary minimizers of interval regions
  // are detected from the subgradient sign.
  bisection_1d,
  // Long run of the stochastic iteration with the exact full-sum oracle and
  // the extended strongly convex schedule; the best iterate becomes the
  // certificate. When the problem carries an exact certifier the point is
  // polished through it and the residual is a true duality gap.
  long_run,
};

struct CertifyOptions {
  double residual_target = 1e-9;
  std::uint64_t seed = 0x5eed;
  std::optional<Vector> start;
};

// Produce an optimum certificate. The result is flagged low_confidence when
// the budget ran out before the residual target was met; callers that need
// trustworthy gaps must refuse such certificates.
OptimumCertificate certify_optimum(const Problem& problem, CertifyMethod method,
                                   std::uint64_t budget,
                                   const CertifyOptions& options = {});

}  // namespace subgrad

#endif  // SUBGRAD_CERTIFY_HPP
