#include "subgrad/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "subgrad/errors.hpp"
#include "subgrad/kahan.hpp"

namespace subgrad {

namespace {

double require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("theorem_rhs: ") + what +
                      " must be positive");
  }
  return v;
}

double require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("theorem_rhs: ") + what +
                      " must be nonnegative");
  }
  return v;
}

double horizon_count(const BoundParams& p) {
  if (p.horizon < 0) throw ConfigError("theorem_rhs: horizon missing");
  return static_cast<double>(p.horizon) + 1.0;  // T + 1
}

void require_alphas(const BoundParams& p) {
  if (p.alphas.empty()) {
    throw ConfigError("theorem_rhs: step sequence required for this theorem");
  }
}

double sum_alpha(std::span<const double> alphas) {
  KahanSum s;
  for (double a : alphas) s.add(a);
  return s.value();
}

double sum_alpha_sq(std::span<const double> alphas) {
  KahanSum s;
  for (double a : alphas) s.add(a * a);
  return s.value();
}

}  // namespace

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T2: return "T2";
    case TheoremId::C2: return "C2";
    case TheoremId::C3: return "C3";
    case TheoremId::C4: return "C4";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T6_simple: return "T6-simple";
    case TheoremId::C5: return "C5";
    case TheoremId::QG: return "QG";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& name) {
  if (name == "T2") return TheoremId::T2;
  if (name == "C2") return TheoremId::C2;
  if (name == "C3") return TheoremId::C3;
  if (name == "C4") return TheoremId::C4;
  if (name == "T3") return TheoremId::T3;
  if (name == "T4") return TheoremId::T4;
  if (name == "T5") return TheoremId::T5;
  if (name == "T6") return TheoremId::T6;
  if (name == "T6-simple" || name == "T6_simple") return TheoremId::T6_simple;
  if (name == "C5") return TheoremId::C5;
  if (name == "QG") return TheoremId::QG;
  throw ConfigError("unknown theorem id '" + name + "'");
}

double shor_rhs(double distance_to_optimum, std::span<const double> alphas) {
  if (alphas.empty()) throw ConfigError("shor_rhs: empty step sequence");
  require_nonnegative(distance_to_optimum, "R");
  for (double a : alphas) {
    if (!(a > 0.0)) throw ConfigError("shor_rhs: steps must be positive");
  }
  return (distance_to_optimum * distance_to_optimum + sum_alpha_sq(alphas)) /
         (2.0 * sum_alpha(alphas));
}

double theorem_rhs(TheoremId id, const BoundParams& p) {
  switch (id) {
    case TheoremId::T2: {
      if (p.growth == nullptr) {
        throw ConfigError("theorem_rhs: T2 requires a growth model");
      }
      require_alphas(p);
      return growth_eval(*p.growth, shor_rhs(p.distance_to_optimum, p.alphas));
    }
    case TheoremId::C2: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l = require_positive(p.lipschitz, "L");
      return l * r * r / (2.0 * horizon_count(p));
    }
    case TheoremId::C3: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l = require_positive(p.lipschitz, "L");
      const double v = require_positive(p.holder_exponent, "v");
      return l * std::pow(r, v + 1.0) /
             ((v + 1.0) * std::pow(horizon_count(p), (v + 1.0) / 2.0));
    }
    case TheoremId::C4: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double lphi = require_positive(p.smooth_part, "L_phi");
      const double lh = require_nonnegative(p.lipschitz_part, "L_h");
      const double v = require_positive(p.holder_exponent, "v");
      const double t1 = horizon_count(p);
      return lphi * std::pow(r, v + 1.0) /
                 ((v + 1.0) * std::pow(t1, (v + 1.0) / 2.0)) +
             2.0 * lh * r / std::sqrt(t1);
    }
    case TheoremId::T3: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l = require_positive(p.lipschitz, "L");
      require_alphas(p);
      return (r * r + l * l * sum_alpha_sq(p.alphas)) /
             (2.0 * sum_alpha(p.alphas));
    }
    case TheoremId::T4: {
      const double l = require_positive(p.lipschitz, "L");
      const double mu = require_positive(p.mu, "mu");
      return 2.0 * l * l / (mu * (horizon_count(p) + 1.0));
    }
    case TheoremId::T5: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l0 = require_nonnegative(p.l0, "L0");
      const double l1 = require_nonnegative(p.l1, "L1");
      require_alphas(p);
      KahanSum denom;
      for (double a : p.alphas) denom.add(a * (2.0 - l1 * a));
      if (!(denom.value() > 0.0)) {
        throw PreconditionError(
            "theorem_rhs: T5 denominator nonpositive (L1 alpha_k >= 2)");
      }
      return (r * r + l0 * l0 * sum_alpha_sq(p.alphas)) / denom.value();
    }
    case TheoremId::T6: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l0 = require_nonnegative(p.l0, "L0");
      const double l1 = require_nonnegative(p.l1, "L1");
      const double mu = require_positive(p.mu, "mu");
      require_alphas(p);
      KahanSum denom;
      for (std::size_t k = 0; k < p.alphas.size(); ++k) {
        denom.add((static_cast<double>(k) + 1.0) *
                  (2.0 - l1 * p.alphas[k]));
      }
      if (!(denom.value() > 0.0)) {
        throw PreconditionError(
            "theorem_rhs: T6 denominator nonpositive (L1 alpha_k >= 2)");
      }
      return (2.0 * l0 * l0 * horizon_count(p) + l1 * l1 * r * r / 2.0) /
             (mu * denom.value());
    }
    case TheoremId::T6_simple: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l0 = require_nonnegative(p.l0, "L0");
      const double l1 = require_nonnegative(p.l1, "L1");
      const double mu = require_positive(p.mu, "mu");
      const double t1 = horizon_count(p);
      return 4.0 * l0 * l0 / (mu * (t1 + 1.0)) +
             l1 * l1 * r * r / (mu * t1 * (t1 + 1.0));
    }
    case TheoremId::C5: {
      const double r = require_nonnegative(p.distance_to_optimum, "R");
      const double l = require_positive(p.lipschitz, "L");
      const double lambda = require_positive(p.lambda, "lambda");
      const double t1 = horizon_count(p);
      return 24.0 * l * l / (lambda * (t1 + 1.0)) +
             36.0 * lambda * r * r / (t1 * (t1 + 1.0));
    }
    case TheoremId::QG: {
      const double dist0 = require_nonnegative(p.distance_to_optimum, "dist0");
      const double l0 = require_nonnegative(p.l0, "L0");
      const double l1 = require_nonnegative(p.l1, "L1");
      const double mu = require_positive(p.mu, "mu");
      require_alphas(p);
      KahanSum denom;
      for (std::size_t k = 0; k < p.alphas.size(); ++k) {
        denom.add((static_cast<double>(k) + 1.0) *
                  (1.0 - l1 * p.alphas[k]));
      }
      if (!(denom.value() > 0.0)) {
        throw PreconditionError(
            "theorem_rhs: QG denominator nonpositive (L1 alpha_k >= 1)");
      }
      return (4.0 * l0 * l0 * horizon_count(p) + l1 * l1 * dist0 * dist0) /
             (mu * denom.value());
    }
  }
  throw ConfigError("theorem_rhs: unknown theorem");
}

double fit_rate_exponent(
    std::span<const std::pair<double, double>> gap_series) {
  std::vector<std::pair<double, double>> points;  // (log T, log gap)
  double max_t = 0.0;
  for (const auto& [t, gap] : gap_series) {
    if (!(t > 0.0)) throw ConfigError("fit_rate_exponent: T must be positive");
    if (gap > 0.0) {
      points.emplace_back(t, gap);
      max_t = std::max(max_t, t);
    }
  }
  if (points.size() < 3) {
    throw ConfigError("fit_rate_exponent: fewer than three positive-gap "
                      "points survive");
  }

  // Asymptotic fit: keep the largest decade; if that leaves too few points,
  // fall back to the three largest T.
  std::vector<std::pair<double, double>> window;
  for (const auto& pt : points) {
    if (pt.first >= max_t / 10.0) window.push_back(pt);
  }
  if (window.size() < 3) {
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    window.assign(points.begin(), points.begin() + 3);
  }

  KahanSum sx, sy;
  for (const auto& [t, gap] : window) {
    sx.add(std::log(t));
    sy.add(std::log(gap));
  }
  const double n = static_cast<double>(window.size());
  const double mean_x = sx.value() / n;
  const double mean_y = sy.value() / n;
  KahanSum sxx, sxy;
  for (const auto& [t, gap] : window) {
    const double dx = std::log(t) - mean_x;
    sxx.add(dx * dx);
    sxy.add(dx * (std::log(gap) - mean_y));
  }
  if (!(sxx.value() > 0.0)) {
    throw ConfigError("fit_rate_exponent: degenerate T values");
  }
  return sxy.value() / sxx.value();
}

}  // namespace subgrad
