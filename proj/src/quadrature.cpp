#include "hrc/quadrature.hpp"

#include "hrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hrc {

GaussLegendreRule gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z_old = z;
      z = z_old - p1 / dp;
      if (std::abs(z - z_old) <= 1e-15)
        break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

const GaussLegendreRule &gauss_legendre_32() {
  static const GaussLegendreRule rule = gauss_legendre(32);
  return rule;
}

namespace {

double panel(const std::function<double(double)> &f, double a, double b) {
  const auto &rule = gauss_legendre_32();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

struct Adaptive {
  const std::function<double(double)> &f;
  int max_depth;
  int panels = 0;
  double error = 0.0;

  double run(double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = panel(f, a, m);
    const double right = panel(f, m, b);
    const double diff = std::abs(left + right - whole);
    if (diff <= tol || b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(m)) {
      ++panels;
      error += diff;
      return left + right;
    }
    if (depth >= max_depth)
      throw QuadratureError("adaptive quadrature did not converge on [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]",
                            left + right, diff);
    return run(a, m, left, 0.5 * tol, depth + 1) +
           run(m, b, right, 0.5 * tol, depth + 1);
  }
};

} // namespace

QuadratureResult integrate(const std::function<double(double)> &f, double lo,
                           double hi, std::span<const double> cuts,
                           const QuadratureOptions &opts) {
  QuadratureResult result;
  if (!(hi > lo))
    return result;

  std::vector<double> points{lo};
  for (double c : cuts)
    if (c > lo && c < hi)
      points.push_back(c);
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<double> seeds{points.front()};
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double a = points[i - 1];
    const double b = points[i];
    if (a > 0.0)
      for (double x = 2.0 * a; x < b * (1.0 - 1e-12); x *= 2.0)
        seeds.push_back(x);
    seeds.push_back(b);
  }

  std::vector<double> coarse(seeds.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
    coarse[i] = panel(f, seeds[i], seeds[i + 1]);
    total += std::abs(coarse[i]);
  }
  const double tol = std::max(opts.abs_tol, opts.rel_tol * total);
  const double per_panel = tol / static_cast<double>(coarse.size());

  Adaptive adaptive{f, opts.max_depth};
  for (std::size_t i = 0; i < coarse.size(); ++i)
    result.value += adaptive.run(seeds[i], seeds[i + 1], coarse[i], per_panel, 0);
  result.error = adaptive.error;
  result.panels = adaptive.panels;
  return result;
}

} // namespace hrc
