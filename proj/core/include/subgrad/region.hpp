#ifndef SUBGRAD_REGION_HPP
#define SUBGRAD_REGION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "subgrad/vector_ops.hpp"

namespace subgrad {

// Closed convex feasible region with a closed-form Euclidean projection.
// The catalog is fixed to five kinds whose projections are exact, which
// keeps the nonexpansiveness and idempotence checks tight.
class FeasibleRegion {
 public:
  enum class Kind {
    whole_space,
    box,
    ball,
    halfspace,
    nonnegative_orthant,
  };

  static FeasibleRegion whole_space();
  static FeasibleRegion box(Vector lower, Vector upper);
  static FeasibleRegion ball(Vector center, double radius);
  // { x : normal . x <= offset }
  static FeasibleRegion halfspace(Vector normal, double offset);
  static FeasibleRegion nonnegative_orthant();

  Kind kind() const { return kind_; }

  // 0 for kinds valid in any dimension (whole space, orthant).
  std::size_t dimension() const;

  // Euclidean nearest feasible point. Throws InvalidInputError on dimension
  // mismatch or non-finite input.
  Vector project(const Vector& x) const;

  bool contains(const Vector& x, double tolerance = 1e-12) const;

  std::string describe() const;

  const Vector& lower() const { return a_; }
  const Vector& upper() const { return b_; }
  const Vector& center() const { return a_; }
  const Vector& normal() const { return a_; }
  double radius() const { return scalar_; }
  double offset() const { return scalar_; }

 private:
  FeasibleRegion(Kind kind, Vector a, Vector b, double scalar)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), scalar_(scalar) {}

  void check_dimension(const Vector& x) const;

  Kind kind_;
  Vector a_;  // box lower / ball center / halfspace normal
  Vector b_;  // box upper
  double scalar_ = 0.0;  // ball radius / halfspace offset
};

}  // namespace subgrad

#endif  // SUBGRAD_REGION_HPP
