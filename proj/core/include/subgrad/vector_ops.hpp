#ifndef SUBGRAD_VECTOR_OPS_HPP
#define SUBGRAD_VECTOR_OPS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "subgrad/errors.hpp"

namespace subgrad {

// Dense point/subgradient in R^d. Components must stay finite; oracle
// outputs are checked by the solvers before entering a trace.
using Vector = std::vector<double>;

inline bool is_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline void require_same_dimension(std::span<const double> a,
                                   std::span<const double> b,
                                   const char* what) {
  if (a.size() != b.size()) {
    throw InvalidInputError(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dimension(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(std::span<const double> x) { return dot(x, x); }

inline double norm(std::span<const double> x) {
  return std::sqrt(squared_norm(x));
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  require_same_dimension(a, b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vector subtract(std::span<const double> a, std::span<const double> b) {
  require_same_dimension(a, b, "subtract");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector add(std::span<const double> a, std::span<const double> b) {
  require_same_dimension(a, b, "add");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector scaled(std::span<const double> x, double factor) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = factor * x[i];
  return out;
}

// x - step * direction
inline Vector step_from(std::span<const double> x,
                        std::span<const double> direction, double step) {
  require_same_dimension(x, direction, "step_from");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - step * direction[i];
  return out;
}

inline Vector zeros(std::size_t dimension) { return Vector(dimension, 0.0); }

}  // namespace subgrad

#endif  // SUBGRAD_VECTOR_OPS_HPP
