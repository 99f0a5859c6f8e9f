#include "subgrad/svm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "subgrad/errors.hpp"
#include "subgrad/kahan.hpp"
#include "subgrad/rng.hpp"

namespace subgrad {

SvmInstance::SvmInstance(std::vector<Vector> features, std::vector<int> labels,
                         double lambda, std::string name)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      lambda_(lambda),
      name_(std::move(name)) {
  if (features_.empty()) throw InvalidInputError("svm: no samples");
  if (features_.size() != labels_.size()) {
    throw InvalidInputError("svm: feature/label count mismatch");
  }
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) {
    throw InvalidInputError("svm: lambda must be positive");
  }
  const std::size_t d = features_.front().size();
  if (d == 0) throw InvalidInputError("svm: zero-dimensional features");
  KahanSum sq;
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (features_[i].size() != d) {
      throw InvalidInputError("svm: inconsistent feature dimension at row " +
                              std::to_string(i + 1));
    }
    if (!is_finite(features_[i])) {
      throw InvalidInputError("svm: non-finite feature at row " +
                              std::to_string(i + 1));
    }
    if (labels_[i] != 1 && labels_[i] != -1) {
      throw InvalidInputError("svm: label must be +1 or -1 at row " +
                              std::to_string(i + 1));
    }
    sq.add(squared_norm(features_[i]));
  }
  l_squared_ = sq.value() / static_cast<double>(features_.size());
}

SvmInstance make_synthetic_svm(std::size_t n, std::size_t d, double lambda,
                               std::uint64_t seed) {
  if (n == 0 || d == 0) throw InvalidInputError("synthetic svm: n, d >= 1");
  Rng rng(seed);
  Vector separator(d);
  for (auto& v : separator) v = rng.normal();
  std::vector<Vector> features(n, Vector(d));
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) features[i][j] = rng.normal();
    int y = dot(separator, features[i]) >= 0.0 ? 1 : -1;
    if (rng.uniform01() < 0.1) y = -y;  // label noise
    labels[i] = y;
  }
  std::ostringstream name;
  name << "svm-synthetic(n=" << n << ",d=" << d << ",lambda=" << lambda
       << ",seed=" << seed << ")";
  return SvmInstance(std::move(features), std::move(labels), lambda,
                     name.str());
}

SvmInstance load_svm_csv(const std::string& path, double lambda) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("svm csv: cannot open '" + path + "'");
  std::vector<Vector> features;
  std::vector<int> labels;
  std::string line;
  std::size_t line_number = 0;
  std::size_t dimension = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
    if (line.empty()) continue;
    std::vector<double> values;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      const std::size_t comma = line.find(',', begin);
      const std::string token =
          line.substr(begin, comma == std::string::npos ? std::string::npos
                                                        : comma - begin);
      try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size() || !std::isfinite(v)) throw std::exception();
        values.push_back(v);
      } catch (...) {
        throw InvalidInputError("svm csv: malformed value '" + token +
                                "' at line " + std::to_string(line_number));
      }
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    if (values.size() < 2) {
      throw InvalidInputError("svm csv: row needs a label and at least one "
                              "feature at line " +
                              std::to_string(line_number));
    }
    const double label = values.front();
    if (label != 1.0 && label != -1.0) {
      throw InvalidInputError("svm csv: label must be +1 or -1 at line " +
                              std::to_string(line_number));
    }
    Vector w(values.begin() + 1, values.end());
    if (dimension == 0) {
      dimension = w.size();
    } else if (w.size() != dimension) {
      throw InvalidInputError("svm csv: dimension mismatch at line " +
                              std::to_string(line_number) + " (expected " +
                              std::to_string(dimension) + " features, got " +
                              std::to_string(w.size()) + ")");
    }
    features.push_back(std::move(w));
    labels.push_back(label > 0 ? 1 : -1);
  }
  if (features.empty()) throw InvalidInputError("svm csv: empty file");
  return SvmInstance(std::move(features), std::move(labels), lambda,
                     "svm-csv(" + path + ")");
}

namespace {

// Hinge summand subgradient; the boundary margin uses the ">= 0" branch.
Vector hinge_subgradient(const SvmInstance& svm, const Vector& x,
                         std::size_t i) {
  const Vector& w = svm.features()[i];
  const double y = static_cast<double>(svm.labels()[i]);
  if (1.0 - y * dot(w, x) >= 0.0) return scaled(w, -y);
  return zeros(x.size());
}

// Exact solver for the box-constrained dual
//   max_{t in [0,1]^n} (1/n) sum t_i - (1/(2 lambda)) |u(t)|^2,
//   u(t) = (1/n) sum t_i y_i w_i,
// by cyclic exact coordinate ascent. Returns the primal point x = u/lambda
// and the dual value, a true lower bound on f*.
struct DualSolveResult {
  Vector x;
  double lower_bound;
};

DualSolveResult solve_svm_dual(const SvmInstance& svm,
                               const std::function<double(const Vector&)>& f,
                               const Vector& warm_start,
                               std::uint64_t max_sweeps) {
  const std::size_t n = svm.sample_count();
  const std::size_t d = svm.dimension();
  const double lambda = svm.lambda();
  const double nd = static_cast<double>(n);

  std::vector<double> t(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = static_cast<double>(svm.labels()[i]);
    t[i] = (1.0 - y * dot(svm.features()[i], warm_start)) > 0.0 ? 1.0 : 0.0;
  }

  const auto recompute_u = [&](Vector& u) {
    KahanVectorSum sum(d);
    for (std::size_t i = 0; i < n; ++i) {
      sum.add_scaled(svm.features()[i],
                     t[i] * static_cast<double>(svm.labels()[i]) / nd);
    }
    u = sum.value();
  };

  Vector u(d, 0.0);
  recompute_u(u);

  double best_gap = std::numeric_limits<double>::infinity();
  Vector best_x = warm_start;
  double best_lower = -std::numeric_limits<double>::infinity();
  std::uint64_t last_improvement = 0;

  for (std::uint64_t sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector& w = svm.features()[i];
      const double y = static_cast<double>(svm.labels()[i]);
      const double w_sq = squared_norm(w);
      // u without summand i
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        s += w[j] * (u[j] - (t[i] * y / nd) * w[j]);
      }
      s *= y;
      double t_new;
      if (w_sq == 0.0) {
        t_new = 1.0;
      } else {
        t_new = std::min(1.0, std::max(0.0, nd * (lambda - s) / w_sq));
      }
      const double delta = (t_new - t[i]) * y / nd;
      if (delta != 0.0) {
        for (std::size_t j = 0; j < d; ++j) u[j] += delta * w[j];
        t[i] = t_new;
      }
    }
    recompute_u(u);  // shed incremental drift each sweep

    KahanSum t_sum;
    for (double v : t) t_sum.add(v);
    const double dual = t_sum.value() / nd - squared_norm(u) / (2.0 * lambda);
    const Vector x = scaled(u, 1.0 / lambda);
    const double primal = f(x);
    const double gap = primal - dual;
    if (gap < best_gap) {
      best_gap = gap;
      best_x = x;
      best_lower = dual;
      last_improvement = sweep;
    }
    if (best_gap <= 1e-14 * std::max(1.0, std::fabs(primal))) break;
    if (sweep - last_improvement > 64) break;  // converged to rounding noise
  }
  return {best_x, best_lower};
}

}  // namespace

Problem make_svm(SvmInstance instance) {
  auto svm = std::make_shared<SvmInstance>(std::move(instance));
  const std::size_t d = svm->dimension();
  const double lambda = svm->lambda();
  const double l_squared = svm->mean_squared_feature_norm();

  Problem problem;
  problem.name = svm->name();
  problem.dimension = d;
  problem.region = FeasibleRegion::whole_space();

  problem.objective = [svm](const Vector& x) {
    KahanSum hinge;
    for (std::size_t i = 0; i < svm->sample_count(); ++i) {
      const double margin = 1.0 - static_cast<double>(svm->labels()[i]) *
                                      dot(svm->features()[i], x);
      hinge.add(std::max(0.0, margin));
    }
    return hinge.value() / static_cast<double>(svm->sample_count()) +
           0.5 * svm->lambda() * squared_norm(x);
  };

  problem.oracle = [svm](const Vector& x) {
    KahanVectorSum sum(x.size());
    for (std::size_t i = 0; i < svm->sample_count(); ++i) {
      sum.add_scaled(hinge_subgradient(*svm, x, i),
                     1.0 / static_cast<double>(svm->sample_count()));
    }
    Vector g = sum.value();
    for (std::size_t j = 0; j < x.size(); ++j) g[j] += svm->lambda() * x[j];
    return g;
  };

  StochasticOracle oracle;
  oracle.sample_count = svm->sample_count();
  oracle.estimator = [svm](const Vector& x, std::uint64_t i) {
    Vector g = hinge_subgradient(*svm, x, static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < x.size(); ++j) g[j] += svm->lambda() * x[j];
    return g;
  };
  problem.stochastic_oracle = std::move(oracle);

  problem.strong_convexity_mu = lambda;
  problem.quadratic_growth_mu = lambda;
  problem.second_moment =
      SecondMomentModel(std::sqrt(6.0 * l_squared), 6.0 * lambda);
  // f - f* <= lambda t^2 + (L + sqrt(2 lambda)) t with t = |x - x*|, using
  // |x*| <= sqrt(2/lambda) from f(x*) <= f(0) = 1.
  problem.growth_model = GrowthModel::composite(
      2.0 * lambda, 1.0,
      0.5 * (std::sqrt(l_squared) + std::sqrt(2.0 * lambda)));

  ExactCertifier certifier;
  auto objective = problem.objective;
  certifier.solve = [svm, objective](const Vector& warm_start,
                                     std::uint64_t budget) {
    const std::uint64_t sweeps =
        std::min<std::uint64_t>(200000, std::max<std::uint64_t>(2000, budget));
    const DualSolveResult result =
        solve_svm_dual(*svm, objective, warm_start, sweeps);
    return std::make_pair(result.x, result.lower_bound);
  };
  problem.exact_certifier = std::move(certifier);

  return problem;
}

}  // namespace subgrad
