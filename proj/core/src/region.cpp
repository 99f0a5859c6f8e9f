#include "subgrad/region.hpp"

#include <algorithm>
#include <cmath>

#include "subgrad/errors.hpp"

namespace subgrad {

FeasibleRegion FeasibleRegion::whole_space() {
  return FeasibleRegion(Kind::whole_space, {}, {}, 0.0);
}

FeasibleRegion FeasibleRegion::box(Vector lower, Vector upper) {
  require_same_dimension(lower, upper, "box");
  if (lower.empty()) throw InvalidInputError("box: empty bounds");
  if (!is_finite(lower) || !is_finite(upper)) {
    throw InvalidInputError("box: non-finite bounds");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw InvalidInputError("box: lower bound exceeds upper bound at index " +
                              std::to_string(i));
    }
  }
  return FeasibleRegion(Kind::box, std::move(lower), std::move(upper), 0.0);
}

FeasibleRegion FeasibleRegion::ball(Vector center, double radius) {
  if (center.empty()) throw InvalidInputError("ball: empty center");
  if (!is_finite(center) || !std::isfinite(radius)) {
    throw InvalidInputError("ball: non-finite parameters");
  }
  if (radius <= 0.0) throw InvalidInputError("ball: radius must be positive");
  return FeasibleRegion(Kind::ball, std::move(center), {}, radius);
}

FeasibleRegion FeasibleRegion::halfspace(Vector normal, double offset) {
  if (normal.empty()) throw InvalidInputError("halfspace: empty normal");
  if (!is_finite(normal) || !std::isfinite(offset)) {
    throw InvalidInputError("halfspace: non-finite parameters");
  }
  if (norm(normal) == 0.0) {
    throw InvalidInputError("halfspace: normal must be nonzero");
  }
  return FeasibleRegion(Kind::halfspace, std::move(normal), {}, offset);
}

FeasibleRegion FeasibleRegion::nonnegative_orthant() {
  return FeasibleRegion(Kind::nonnegative_orthant, {}, {}, 0.0);
}

std::size_t FeasibleRegion::dimension() const {
  switch (kind_) {
    case Kind::box:
    case Kind::ball:
    case Kind::halfspace:
      return a_.size();
    default:
      return 0;
  }
}

void FeasibleRegion::check_dimension(const Vector& x) const {
  if (!is_finite(x)) {
    throw InvalidInputError("project: non-finite input point");
  }
  const std::size_t d = dimension();
  if (d != 0 && x.size() != d) {
    throw InvalidInputError("project: point dimension " +
                            std::to_string(x.size()) +
                            " does not match region dimension " +
                            std::to_string(d));
  }
}

Vector FeasibleRegion::project(const Vector& x) const {
  check_dimension(x);
  switch (kind_) {
    case Kind::whole_space:
      return x;
    case Kind::box: {
      Vector out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::min(std::max(x[i], a_[i]), b_[i]);
      }
      return out;
    }
    case Kind::ball: {
      Vector shifted = subtract(x, a_);
      const double r = norm(shifted);
      if (r <= scalar_) return x;
      const double scale = scalar_ / r;
      Vector out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = a_[i] + scale * shifted[i];
      }
      return out;
    }
    case Kind::halfspace: {
      const double slack = dot(a_, x) - scalar_;
      if (slack <= 0.0) return x;
      const double scale = slack / squared_norm(a_);
      Vector out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] - scale * a_[i];
      }
      return out;
    }
    case Kind::nonnegative_orthant: {
      Vector out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], 0.0);
      return out;
    }
  }
  throw InvalidInputError("project: unknown region kind");
}

bool FeasibleRegion::contains(const Vector& x, double tolerance) const {
  check_dimension(x);
  switch (kind_) {
    case Kind::whole_space:
      return true;
    case Kind::box:
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < a_[i] - tolerance || x[i] > b_[i] + tolerance) return false;
      }
      return true;
    case Kind::ball:
      return distance(x, a_) <= scalar_ + tolerance * (1.0 + scalar_);
    case Kind::halfspace:
      return dot(a_, x) <= scalar_ + tolerance * (1.0 + std::fabs(scalar_));
    case Kind::nonnegative_orthant:
      for (double v : x) {
        if (v < -tolerance) return false;
      }
      return true;
  }
  return false;
}

std::string FeasibleRegion::describe() const {
  switch (kind_) {
    case Kind::whole_space:
      return "whole-space";
    case Kind::box:
      return "box(d=" + std::to_string(a_.size()) + ")";
    case Kind::ball:
      return "ball(d=" + std::to_string(a_.size()) +
             ",r=" + std::to_string(scalar_) + ")";
    case Kind::halfspace:
      return "halfspace(d=" + std::to_string(a_.size()) + ")";
    case Kind::nonnegative_orthant:
      return "nonnegative-orthant";
  }
  return "?";
}

}  // namespace subgrad
