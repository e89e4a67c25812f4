#pragma once

// Radial test functions f(r) on (0, inf) and weighted integrals of their
// derivatives.

#include "hrc/quadrature.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hrc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A radial profile with analytic first and second derivatives. Derivatives
/// vanish outside support(); smoothness may drop only at breakpoints().
class RadialProfile {
public:
  virtual ~RadialProfile() = default;

  virtual double value(double r) const = 0;
  virtual double first_derivative(double r) const = 0;
  virtual double second_derivative(double r) const = 0;
  virtual Interval support() const = 0;
  virtual std::vector<double> breakpoints() const = 0;

  /// order 0, 1 or 2.
  double derivative(int order, double r) const;
};

using ProfilePtr = std::shared_ptr<const RadialProfile>;

/// Derivative-bound constant c of the cutoff: |g'| <= c/eps, |g''| <= c/eps^2
/// on [eps, 2eps] and |g'| <= c eps, |g''| <= c eps^2 on [1/(2eps), 1/eps].
/// The outer transition has width 1/(2eps), so |g''| reaches
/// 4 max|s''| eps^2 ~ 23.1 eps^2 there.
inline constexpr double kCutoffBound = 24.0;

/// Quintic-smoothstep cutoff g_eps: 0 on (0, eps] and [1/eps, inf), 1 on
/// [2eps, 1/(2eps)], C^2 everywhere.
class CutoffProfile final : public RadialProfile {
public:
  explicit CutoffProfile(double epsilon);

  double epsilon() const noexcept { return eps_; }
  double bound_constant() const noexcept { return kCutoffBound; }

  double value(double r) const override;
  double first_derivative(double r) const override;
  double second_derivative(double r) const override;
  Interval support() const override { return {eps_, 1.0 / eps_}; }
  std::vector<double> breakpoints() const override;

private:
  double eps_;
};

CutoffProfile make_cutoff(double epsilon);

enum class MinimizingBranch { power, radial_log };

/// power:      f_eps(r) = r^{-(d-alpha-4)/2} g_eps(r)
/// radial_log: h_eps with h' = g_eps / r and h(r) = int_0^r g_eps(s)/s ds.
/// h_eps is constant (not zero) beyond 1/eps; only its derivatives are
/// compactly supported, and support() describes those.
ProfilePtr minimizing_profile(double epsilon, int d, double alpha,
                              MinimizingBranch branch);

/// Cubic spline sum_i coeffs[i] B_i(r) on the simple knot vector `knots`
/// (knots.size() == coeffs.size() + 4, strictly increasing, knots[0] > 0).
/// C^2 with support [knots.front(), knots.back()].
ProfilePtr make_spline_profile(std::vector<double> knots,
                               std::vector<double> coeffs);

/// kappa * base.
ProfilePtr scale_profile(ProfilePtr base, double kappa);

/// int |f^{(q)}(r)|^2 r^power dr over the support (optionally clipped to
/// `window`), split at breakpoints and integrated adaptively.
QuadratureResult weighted_integral(const RadialProfile &p, int q, double power,
                                   std::optional<Interval> window = std::nullopt);

/// int f^{(q1)}(r) f^{(q2)}(r) r^power dr, same panelling.
QuadratureResult weighted_product_integral(const RadialProfile &p, int q1, int q2,
                                           double power,
                                           std::optional<Interval> window = std::nullopt);

} // namespace hrc
