#include "subgrad/growth.hpp"

#include <cmath>
#include <limits>

#include "subgrad/errors.hpp"

namespace subgrad {

GrowthModel GrowthModel::linear(double lipschitz) {
  if (!(lipschitz >= 0.0)) throw InvalidInputError("growth linear: L < 0");
  return GrowthModel(Kind::linear, lipschitz, 1.0, 0.0);
}

GrowthModel GrowthModel::power(double smoothness, double exponent) {
  if (!(smoothness >= 0.0)) throw InvalidInputError("growth power: L < 0");
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidInputError("growth power: exponent must lie in (0, 1]");
  }
  return GrowthModel(Kind::power, smoothness, exponent, 0.0);
}

GrowthModel GrowthModel::composite(double smooth_part, double exponent,
                                   double lipschitz_part) {
  if (!(smooth_part >= 0.0) || !(lipschitz_part >= 0.0)) {
    throw InvalidInputError("growth composite: negative constant");
  }
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidInputError("growth composite: exponent must lie in (0, 1]");
  }
  return GrowthModel(Kind::composite, smooth_part, exponent, lipschitz_part);
}

GrowthModel GrowthModel::table(
    std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw InvalidInputError("growth table: empty");
  double prev_t = -1.0;
  double prev_v = 0.0;
  for (const auto& [t, v] : samples) {
    if (!(t >= 0.0) || !std::isfinite(t) || !std::isfinite(v)) {
      throw InvalidInputError("growth table: bad sample");
    }
    if (t <= prev_t) throw InvalidInputError("growth table: t not increasing");
    if (v < 0.0 || v < prev_v) {
      throw InvalidInputError("growth table: values must be nonnegative and "
                              "nondecreasing");
    }
    prev_t = t;
    prev_v = v;
  }
  GrowthModel m(Kind::table, 0.0, 1.0, 0.0);
  m.samples_ = std::move(samples);
  return m;
}

std::optional<double> GrowthModel::eval(double t) const {
  if (!(t >= 0.0)) {
    throw InvalidInputError("growth eval: t must be nonnegative");
  }
  switch (kind_) {
    case Kind::linear:
      return l_ * t;
    case Kind::power:
      return l_ * std::pow(t, v_ + 1.0) / (v_ + 1.0);
    case Kind::composite:
      return l_ * std::pow(t, v_ + 1.0) / (v_ + 1.0) + 2.0 * lh_ * t;
    case Kind::table: {
      if (t > samples_.back().first) return std::nullopt;
      if (t <= samples_.front().first) return samples_.front().second;
      for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (t <= samples_[i].first) {
          const auto& [t0, v0] = samples_[i - 1];
          const auto& [t1, v1] = samples_[i];
          const double w = (t - t0) / (t1 - t0);
          return v0 + w * (v1 - v0);
        }
      }
      return samples_.back().second;
    }
  }
  throw InvalidInputError("growth eval: unknown kind");
}

double growth_eval(const GrowthModel& model, double t) {
  const auto v = model.eval(t);
  return v ? *v : std::numeric_limits<double>::infinity();
}

bool growth_is_nondecreasing(const GrowthModel& model, double t_max,
                             int grid_points) {
  double prev = -std::numeric_limits<double>::infinity();
  bool unbounded_seen = false;
  for (int i = 0; i < grid_points; ++i) {
    const double t = t_max * static_cast<double>(i) / (grid_points - 1);
    const auto v = model.eval(t);
    if (!v) {
      unbounded_seen = true;
      continue;
    }
    // A finite value after the unbounded tail started would break monotonicity.
    if (unbounded_seen) return false;
    if (*v < prev) return false;
    prev = *v;
  }
  return true;
}

std::string GrowthModel::describe() const {
  switch (kind_) {
    case Kind::linear:
      return "linear(L=" + std::to_string(l_) + ")";
    case Kind::power:
      return "power(L=" + std::to_string(l_) + ",v=" + std::to_string(v_) + ")";
    case Kind::composite:
      return "composite(Lphi=" + std::to_string(l_) +
             ",v=" + std::to_string(v_) + ",Lh=" + std::to_string(lh_) + ")";
    case Kind::table:
      return "table(" + std::to_string(samples_.size()) + " pts)";
  }
  return "?";
}

SecondMomentModel::SecondMomentModel(double l0_in, double l1_in)
    : l0(l0_in), l1(l1_in) {
  if (!(l0 >= 0.0) || !(l1 >= 0.0)) {
    throw InvalidInputError("second-moment model: constants must be >= 0");
  }
}

}  // namespace subgrad
