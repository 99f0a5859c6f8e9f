#ifndef SUBGRAD_SVM_HPP
#define SUBGRAD_SVM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subgrad/problem.hpp"
#include "subgrad/vector_ops.hpp"

namespace subgrad {

// Hinge-loss training instance
//   f(x) = (1/n) sum_i max{0, 1 - y_i w_i.x} + (lambda/2) |x|^2.
class SvmInstance {
 public:
  // features: n rows of equal dimension d >= 1; labels in {-1, +1}.
  SvmInstance(std::vector<Vector> features, std::vector<int> labels,
              double lambda, std::string name = "svm");

  std::size_t sample_count() const { return features_.size(); }
  std::size_t dimension() const { return features_.front().size(); }
  double lambda() const { return lambda_; }
  const std::vector<Vector>& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  // L^2 = (1/n) sum |w_i|^2, the second-moment constant of the hinge oracle.
  double mean_squared_feature_norm() const { return l_squared_; }

 private:
  std::vector<Vector> features_;
  std::vector<int> labels_;
  double lambda_;
  double l_squared_;
  std::string name_;
};

// Seeded synthetic instance: standard-normal features, labels from a random
// hyperplane with a 10% flip rate. Fully reproducible from the seed.
SvmInstance make_synthetic_svm(std::size_t n, std::size_t d, double lambda,
                               std::uint64_t seed);

// Parse "label,w_1,...,w_d" rows (UTF-8, LF or CRLF, no header). Labels must
// be exactly +-1; all rows must share one dimension. Errors carry the
// 1-based line number.
SvmInstance load_svm_csv(const std::string& path, double lambda);

// Problem with the uniform single-summand stochastic oracle
//   g(x; i) = (1 - y_i w_i.x >= 0 ? -y_i w_i : 0) + lambda x
// and the exact full-sum subgradient as deterministic oracle. Declares
// strong convexity lambda and the second-moment model (6 L^2, 6 lambda).
// The optimum certificate is not analytic; produce one with certify_optimum.
Problem make_svm(SvmInstance instance);

}  // namespace subgrad

#endif  // SUBGRAD_SVM_HPP
