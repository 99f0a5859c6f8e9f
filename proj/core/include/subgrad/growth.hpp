#ifndef SUBGRAD_GROWTH_HPP
#define SUBGRAD_GROWTH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subgrad {

// Nondecreasing envelope D with f(x) - f* <= D(|x - x*|). Closed forms for
// the linear, power and composite families plus an interpolated table kind.
// A table is finite up to its last grid point and unbounded past it; eval()
// reports the unbounded tail as nullopt so comparisons never touch a float
// infinity.
class GrowthModel {
 public:
  enum class Kind { linear, power, composite, table };

  // D(t) = L t
  static GrowthModel linear(double lipschitz);
  // D(t) = L t^{v+1} / (v+1)
  static GrowthModel power(double smoothness, double exponent);
  // D(t) = L_phi t^{v+1} / (v+1) + 2 L_h t
  static GrowthModel composite(double smooth_part, double exponent,
                               double lipschitz_part);
  // Piecewise-linear interpolation of (t, D(t)) samples; t strictly
  // increasing, values nonnegative and nondecreasing.
  static GrowthModel table(std::vector<std::pair<double, double>> samples);

  Kind kind() const { return kind_; }

  // nullopt marks the unbounded region of a table model. Throws on t < 0.
  std::optional<double> eval(double t) const;

  double lipschitz() const { return l_; }
  double exponent() const { return v_; }
  double smooth_part() const { return l_; }
  double lipschitz_part() const { return lh_; }

  std::string describe() const;

 private:
  GrowthModel(Kind kind, double l, double v, double lh)
      : kind_(kind), l_(l), v_(v), lh_(lh) {}

  Kind kind_;
  double l_ = 0.0;
  double v_ = 1.0;
  double lh_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
};

// Convenience form of GrowthModel::eval returning +inf for the unbounded
// tail of a table model.
double growth_eval(const GrowthModel& model, double t);

// Validation sweep used by tests: nondecreasing on a 1000-point grid.
bool growth_is_nondecreasing(const GrowthModel& model, double t_max,
                             int grid_points = 1000);

// Second-moment model E|g(x;xi)|^2 <= L0^2 + L1 (f(x) - f*).
struct SecondMomentModel {
  double l0 = 0.0;
  double l1 = 0.0;

  SecondMomentModel() = default;
  SecondMomentModel(double l0_in, double l1_in);

  double bound(double objective_gap) const {
    return l0 * l0 + l1 * objective_gap;
  }
};

}  // namespace subgrad

#endif  // SUBGRAD_GROWTH_HPP
