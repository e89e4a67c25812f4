#include "hrc/radial.hpp"

#include "hrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hrc {

namespace {

// Quintic smoothstep s(t) = 6t^5 - 15t^4 + 10t^3 and its derivatives.
double step(double t) { return t * t * t * (t * (6.0 * t - 15.0) + 10.0); }
double step_d1(double t) { return 30.0 * t * t * (t - 1.0) * (t - 1.0); }
double step_d2(double t) { return 60.0 * t * (2.0 * t - 1.0) * (t - 1.0); }

class PowerProfile final : public RadialProfile {
public:
  PowerProfile(double epsilon, double exponent)
      : cutoff_(epsilon), p_(exponent) {}

  double value(double r) const override {
    const double g = cutoff_.value(r);
    return g == 0.0 ? 0.0 : std::pow(r, p_) * g;
  }
  double first_derivative(double r) const override {
    if (!inside(r))
      return 0.0;
    return p_ * std::pow(r, p_ - 1.0) * cutoff_.value(r) +
           std::pow(r, p_) * cutoff_.first_derivative(r);
  }
  double second_derivative(double r) const override {
    if (!inside(r))
      return 0.0;
    return p_ * (p_ - 1.0) * std::pow(r, p_ - 2.0) * cutoff_.value(r) +
           2.0 * p_ * std::pow(r, p_ - 1.0) * cutoff_.first_derivative(r) +
           std::pow(r, p_) * cutoff_.second_derivative(r);
  }
  Interval support() const override { return cutoff_.support(); }
  std::vector<double> breakpoints() const override { return cutoff_.breakpoints(); }

private:
  bool inside(double r) const {
    const Interval s = cutoff_.support();
    return r > s.lo && r < s.hi;
  }

  CutoffProfile cutoff_;
  double p_;
};

// h_eps with h' = g/r. The antiderivative over the two transition layers is
// tabulated at construction; evaluation integrates the remaining piece with a
// short Gauss-Legendre rule.
class LogProfile final : public RadialProfile {
public:
  explicit LogProfile(double epsilon)
      : cutoff_(epsilon), eps_(epsilon), rule_(gauss_legendre(16)) {
    inner_ = build_table(eps_, 2.0 * eps_);
    outer_ = build_table(0.5 / eps_, 1.0 / eps_);
    plateau_ = std::log((0.5 / eps_) / (2.0 * eps_));
  }

  double value(double r) const override {
    if (r <= eps_)
      return 0.0;
    if (r < 2.0 * eps_)
      return lookup(inner_, eps_, 2.0 * eps_, r);
    const double at_plateau = inner_.back();
    if (r <= 0.5 / eps_)
      return at_plateau + std::log(r / (2.0 * eps_));
    const double at_outer = at_plateau + plateau_;
    if (r < 1.0 / eps_)
      return at_outer + lookup(outer_, 0.5 / eps_, 1.0 / eps_, r);
    return at_outer + outer_.back();
  }
  double first_derivative(double r) const override {
    return cutoff_.value(r) / r;
  }
  double second_derivative(double r) const override {
    return -cutoff_.value(r) / (r * r) + cutoff_.first_derivative(r) / r;
  }
  Interval support() const override { return cutoff_.support(); }
  std::vector<double> breakpoints() const override { return cutoff_.breakpoints(); }

private:
  static constexpr int kTableIntervals = 64;

  double piece(double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double x = mid + half * rule_.nodes[i];
      s += rule_.weights[i] * cutoff_.value(x) / x;
    }
    return s * half;
  }

  std::vector<double> build_table(double a, double b) const {
    std::vector<double> table(kTableIntervals + 1, 0.0);
    const double h = (b - a) / kTableIntervals;
    for (int i = 1; i <= kTableIntervals; ++i)
      table[i] = table[i - 1] + piece(a + (i - 1) * h, a + i * h);
    return table;
  }

  double lookup(const std::vector<double> &table, double a, double b,
                double r) const {
    const double h = (b - a) / kTableIntervals;
    const int i = std::clamp(static_cast<int>((r - a) / h), 0, kTableIntervals - 1);
    const double node = a + i * h;
    return table[i] + piece(node, r);
  }

  CutoffProfile cutoff_;
  double eps_;
  GaussLegendreRule rule_;
  std::vector<double> inner_;
  std::vector<double> outer_;
  double plateau_ = 0.0;
};

class SplineProfile final : public RadialProfile {
public:
  SplineProfile(std::vector<double> knots, std::vector<double> coeffs)
      : t_(std::move(knots)), c_(std::move(coeffs)) {
    if (c_.empty() || t_.size() != c_.size() + 4)
      throw ArgumentError("cubic spline needs knots.size() == coeffs.size() + 4");
    if (!(t_.front() > 0.0))
      throw ArgumentError("spline support must stay away from the origin");
    for (std::size_t i = 1; i < t_.size(); ++i)
      if (!(t_[i] > t_[i - 1]))
        throw ArgumentError("spline knots must be strictly increasing");
    for (double c : c_)
      if (!std::isfinite(c))
        throw ArgumentError("spline coefficients must be finite");
  }

  double value(double r) const override { return eval(r, 0); }
  double first_derivative(double r) const override { return eval(r, 1); }
  double second_derivative(double r) const override { return eval(r, 2); }
  Interval support() const override { return {t_.front(), t_.back()}; }
  std::vector<double> breakpoints() const override { return t_; }

private:
  // Cox-de Boor recursion for all basis functions of degree <= 3 at r, then
  // the standard derivative formula for B-splines.
  double eval(double r, int order) const {
    if (r <= t_.front() || r >= t_.back())
      return 0.0;
    const std::size_t m = t_.size();
    std::vector<double> b0(m - 1, 0.0), b1(m - 2, 0.0), b2(m - 3, 0.0),
        b3(m - 4, 0.0);
    for (std::size_t i = 0; i + 1 < m; ++i)
      b0[i] = (t_[i] <= r && r < t_[i + 1]) ? 1.0 : 0.0;
    auto raise = [&](const std::vector<double> &lower, std::vector<double> &upper,
                     int k) {
      for (std::size_t i = 0; i < upper.size(); ++i) {
        const double left = (r - t_[i]) / (t_[i + k] - t_[i]);
        const double right = (t_[i + k + 1] - r) / (t_[i + k + 1] - t_[i + 1]);
        upper[i] = left * lower[i] + right * lower[i + 1];
      }
    };
    raise(b0, b1, 1);
    raise(b1, b2, 2);
    double s = 0.0;
    if (order == 0) {
      raise(b2, b3, 3);
      for (std::size_t i = 0; i < c_.size(); ++i)
        s += c_[i] * b3[i];
      return s;
    }
    // d/dr B_{i,k} = k (B_{i,k-1}/(t_{i+k}-t_i) - B_{i+1,k-1}/(t_{i+k+1}-t_{i+1}))
    auto diff = [&](const std::vector<double> &lower, std::size_t i, int k) {
      return k * (lower[i] / (t_[i + k] - t_[i]) -
                  lower[i + 1] / (t_[i + k + 1] - t_[i + 1]));
    };
    if (order == 1) {
      for (std::size_t i = 0; i < c_.size(); ++i)
        s += c_[i] * diff(b2, i, 3);
      return s;
    }
    std::vector<double> d2(m - 3, 0.0); // derivatives of the quadratic basis
    for (std::size_t i = 0; i < d2.size(); ++i)
      d2[i] = diff(b1, i, 2);
    for (std::size_t i = 0; i < c_.size(); ++i)
      s += c_[i] * diff(d2, i, 3);
    return s;
  }

  std::vector<double> t_;
  std::vector<double> c_;
};

class ScaledProfile final : public RadialProfile {
public:
  ScaledProfile(ProfilePtr base, double kappa) : base_(std::move(base)), k_(kappa) {
    if (!base_)
      throw ArgumentError("cannot scale a null profile");
  }
  double value(double r) const override { return k_ * base_->value(r); }
  double first_derivative(double r) const override {
    return k_ * base_->first_derivative(r);
  }
  double second_derivative(double r) const override {
    return k_ * base_->second_derivative(r);
  }
  Interval support() const override { return base_->support(); }
  std::vector<double> breakpoints() const override { return base_->breakpoints(); }

private:
  ProfilePtr base_;
  double k_;
};

Interval clip(const RadialProfile &p, std::optional<Interval> window) {
  Interval s = p.support();
  if (window) {
    s.lo = std::max(s.lo, window->lo);
    s.hi = std::min(s.hi, window->hi);
  }
  return s;
}

} // namespace

double RadialProfile::derivative(int order, double r) const {
  switch (order) {
  case 0:
    return value(r);
  case 1:
    return first_derivative(r);
  case 2:
    return second_derivative(r);
  default:
    throw ArgumentError("derivative order must be 0, 1 or 2");
  }
}

CutoffProfile::CutoffProfile(double epsilon) : eps_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw ArgumentError("cutoff epsilon must lie in (0, 1/2), got " +
                        std::to_string(epsilon));
}

double CutoffProfile::value(double r) const {
  if (r <= eps_ || r >= 1.0 / eps_)
    return 0.0;
  if (r < 2.0 * eps_)
    return step((r - eps_) / eps_);
  if (r <= 0.5 / eps_)
    return 1.0;
  return step(2.0 - 2.0 * eps_ * r);
}

double CutoffProfile::first_derivative(double r) const {
  if (r <= eps_ || r >= 1.0 / eps_)
    return 0.0;
  if (r < 2.0 * eps_)
    return step_d1((r - eps_) / eps_) / eps_;
  if (r <= 0.5 / eps_)
    return 0.0;
  return -2.0 * eps_ * step_d1(2.0 - 2.0 * eps_ * r);
}

double CutoffProfile::second_derivative(double r) const {
  if (r <= eps_ || r >= 1.0 / eps_)
    return 0.0;
  if (r < 2.0 * eps_)
    return step_d2((r - eps_) / eps_) / (eps_ * eps_);
  if (r <= 0.5 / eps_)
    return 0.0;
  return 4.0 * eps_ * eps_ * step_d2(2.0 - 2.0 * eps_ * r);
}

std::vector<double> CutoffProfile::breakpoints() const {
  return {eps_, 2.0 * eps_, 0.5 / eps_, 1.0 / eps_};
}

CutoffProfile make_cutoff(double epsilon) { return CutoffProfile(epsilon); }

ProfilePtr minimizing_profile(double epsilon, int d, double alpha,
                              MinimizingBranch branch) {
  if (branch == MinimizingBranch::radial_log) {
    if (std::abs(d - alpha - 4.0) > 1e-12)
      throw ArgumentError("the radial-log profile belongs to d - alpha - 4 = 0");
    return std::make_shared<LogProfile>(epsilon);
  }
  const double exponent = -(d - alpha - 4.0) / 2.0;
  return std::make_shared<PowerProfile>(epsilon, exponent);
}

ProfilePtr make_spline_profile(std::vector<double> knots, std::vector<double> coeffs) {
  return std::make_shared<SplineProfile>(std::move(knots), std::move(coeffs));
}

ProfilePtr scale_profile(ProfilePtr base, double kappa) {
  return std::make_shared<ScaledProfile>(std::move(base), kappa);
}

QuadratureResult weighted_integral(const RadialProfile &p, int q, double power,
                                   std::optional<Interval> window) {
  if (q < 0 || q > 2)
    throw ArgumentError("derivative order must be 0, 1 or 2");
  const Interval s = clip(p, window);
  if (!(s.hi > s.lo))
    return {};
  const auto cuts = p.breakpoints();
  auto f = [&](double r) {
    const double v = p.derivative(q, r);
    return v * v * std::pow(r, power);
  };
  return integrate(f, s.lo, s.hi, cuts);
}

QuadratureResult weighted_product_integral(const RadialProfile &p, int q1, int q2,
                                           double power,
                                           std::optional<Interval> window) {
  if (q1 < 0 || q1 > 2 || q2 < 0 || q2 > 2)
    throw ArgumentError("derivative order must be 0, 1 or 2");
  const Interval s = clip(p, window);
  if (!(s.hi > s.lo))
    return {};
  const auto cuts = p.breakpoints();
  auto f = [&](double r) {
    return p.derivative(q1, r) * p.derivative(q2, r) * std::pow(r, power);
  };
  return integrate(f, s.lo, s.hi, cuts);
}

} // namespace hrc
