#ifndef SUBGRAD_KAHAN_HPP
#define SUBGRAD_KAHAN_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace subgrad {

// Kahan-compensated scalar accumulator. All expectations and weighted
// averages in the toolkit go through this so that 1e-9-level tolerances
// survive million-step sums.
class KahanSum {
 public:
  KahanSum() = default;
  explicit KahanSum(double init) : sum_(init) {}

  void add(double value) {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Component-wise compensated accumulator for vector sums.
class KahanVectorSum {
 public:
  KahanVectorSum() = default;
  explicit KahanVectorSum(std::size_t dimension)
      : sum_(dimension, 0.0), compensation_(dimension, 0.0) {}

  void resize(std::size_t dimension) {
    sum_.assign(dimension, 0.0);
    compensation_.assign(dimension, 0.0);
  }

  std::size_t dimension() const { return sum_.size(); }

  void add_scaled(std::span<const double> x, double weight) {
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      const double y = weight * x[i] - compensation_[i];
      const double t = sum_[i] + y;
      compensation_[i] = (t - sum_[i]) - y;
      sum_[i] = t;
    }
  }

  const std::vector<double>& value() const { return sum_; }

 private:
  std::vector<double> sum_;
  std::vector<double> compensation_;
};

}  // namespace subgrad

#endif  // SUBGRAD_KAHAN_HPP
