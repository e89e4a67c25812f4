#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hrc {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// The 32-point rule, computed once.
const GaussLegendreRule &gauss_legendre_32();

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0; // estimated absolute error
  int panels = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
};

/// Adaptive bisection with a 32-point Gauss-Legendre rule on each panel.
/// `cuts` are extra interior points at which the interval is split up front;
/// each resulting piece with hi/lo > 2 is further cut geometrically (ratio 2)
/// when lo > 0. Panel contributions are summed left to right.
/// Throws QuadratureError when a panel still fails after max_depth bisections.
QuadratureResult integrate(const std::function<double(double)> &f, double lo,
                           double hi, std::span<const double> cuts = {},
                           const QuadratureOptions &opts = {});

} // namespace hrc
