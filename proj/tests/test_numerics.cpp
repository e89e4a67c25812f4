#include "hrc/errors.hpp"
#include "hrc/quadrature.hpp"
#include "hrc/radial.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hrc;

TEST_CASE("gauss-legendre rules") {
  for (int n : {4, 16, 32}) {
    const auto rule = gauss_legendre(n);
    double w = 0, moment = 0;
    for (int i = 0; i < n; ++i) {
      w += rule.weights[i];
      moment += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration") {
  CHECK(integrate([](double x) { return 1.0 / x; }, 1e-6, 1e6).value ==
        doctest::Approx(std::log(1e12)).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  const double cut = 0.3;
  CHECK(integrate([](double x) { return std::abs(x - 0.3); }, 0, 1, std::span(&cut, 1)).value ==
        doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-13));
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0), QuadratureError);
}

TEST_CASE("cutoff profile") {
  const CutoffProfile g(0.01);
  CHECK(g.value(0.005) == 0.0);
  CHECK(g.value(0.02) == 1.0);
  CHECK(g.value(50.0) == 1.0);
  CHECK(g.value(100.0) == 0.0);
  CHECK(g.value(0.015) == doctest::Approx(0.5));
  CHECK(g.value(75.0) == doctest::Approx(0.5));
  // smoothstep 6t^5 - 15t^4 + 10t^3 at t = 0.25
  const double t = 0.25;
  CHECK(g.value(0.0125) == doctest::Approx(6 * std::pow(t, 5) - 15 * std::pow(t, 4) + 10 * t * t * t));
  CHECK_THROWS_AS(CutoffProfile(0.5), ArgumentError);
  CHECK_THROWS_AS(CutoffProfile(0.0), ArgumentError);
}

TEST_CASE("derivatives agree with finite differences") {
  const std::vector<ProfilePtr> profiles{
      std::make_shared<CutoffProfile>(0.05),
      minimizing_profile(0.05, 5, 0.0, MinimizingBranch::power),
      minimizing_profile(0.05, 6, 2.0, MinimizingBranch::radial_log),
      make_spline_profile({0.5, 0.9, 1.4, 2.0, 2.2, 3.1}, {0.7, -0.4}),
  };
  for (const auto &f : profiles) {
    const auto bps = f->breakpoints();
    const Interval s = f->support();
    for (int i = 1; i < 300; ++i) {
      const double r = s.lo * std::pow(s.hi / s.lo, i / 300.0);
      bool near_break = false;
      for (double b : bps)
        near_break = near_break || std::abs(r - b) < 1e-4 * r;
      if (near_break)
        continue;
      const double h = 1e-6 * r;
      const double d1 = (f->value(r + h) - f->value(r - h)) / (2 * h);
      const double d2 = (f->first_derivative(r + h) - f->first_derivative(r - h)) / (2 * h);
      CHECK(std::abs(d1 - f->first_derivative(r)) <=
            1e-6 * std::max(std::abs(f->first_derivative(r)), 1.0 / r));
      CHECK(std::abs(d2 - f->second_derivative(r)) <=
            1e-6 * std::max(std::abs(f->second_derivative(r)), 1.0 / (r * r)));
    }
  }
}

TEST_CASE("radial-log profile") {
  const double eps = 0.01;
  const auto h = minimizing_profile(eps, 4, 0.0, MinimizingBranch::radial_log);
  CHECK(h->value(0.005) == 0.0);
  // on the plateau h(r) = h(2eps) + ln(r / 2eps)
  CHECK(h->value(10.0) - h->value(1.0) == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  // h(2 eps) = int_eps^{2eps} s(t)/r dr, checked with the independent rule
  const auto inner = integrate([&](double r) {
    const double t = (r - eps) / eps;
    return (6 * std::pow(t, 5) - 15 * std::pow(t, 4) + 10 * t * t * t) / r;
  }, eps, 2 * eps);
  CHECK(h->value(2 * eps) == doctest::Approx(inner.value).epsilon(1e-12));
  CHECK(h->value(200.0) == h->value(101.0));
  CHECK_THROWS_AS(minimizing_profile(eps, 5, 0.0, MinimizingBranch::radial_log), ArgumentError);
}

TEST_CASE("spline profile") {
  const auto f = make_spline_profile({1, 2, 3, 4, 5}, {1.0});
  // the uniform cubic B-spline peaks at 2/3 in the middle of its support
  CHECK(f->value(3.0) == doctest::Approx(2.0 / 3.0));
  CHECK(f->value(0.5) == 0.0);
  CHECK(f->value(5.5) == 0.0);
  CHECK(f->first_derivative(3.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(make_spline_profile({1, 2, 3, 4}, {1.0}), ArgumentError);
  CHECK_THROWS_AS(make_spline_profile({0, 1, 2, 3, 4}, {1.0}), ArgumentError);
  CHECK_THROWS_AS(make_spline_profile({1, 3, 2, 4, 5}, {1.0}), ArgumentError);
}

TEST_CASE("weighted integrals") {
  const double eps = 1e-3;
  const auto f = minimizing_profile(eps, 5, 0.0, MinimizingBranch::power);
  const Interval plateau{2 * eps, 0.5 / eps};
  const double L = -std::log(4 * eps * eps);
  CHECK(weighted_integral(*f, 0, 0.0, plateau).value == doctest::Approx(L).epsilon(1e-10));
  CHECK(weighted_integral(*f, 1, 2.0, plateau).value == doctest::Approx(L / 4).epsilon(1e-10));

  const auto zero = make_spline_profile({1, 2, 3, 4, 5}, {0.0});
  CHECK(weighted_integral(*zero, 2, 3.0).value == 0.0);

  // r(2-r)-like bump: compare with a fine trapezoid rule
  const auto b = make_spline_profile({0.2, 0.6, 1.0, 1.4, 1.8, 2.0}, {1.0, 0.5});
  const int n = 1000000;
  const double lo = 0.2, hi = 2.0, step = (hi - lo) / n;
  double trap = 0;
  for (int i = 0; i <= n; ++i) {
    const double r = lo + i * step;
    const double v = b->first_derivative(r);
    trap += (i == 0 || i == n ? 0.5 : 1.0) * v * v;
  }
  trap *= step;
  CHECK(weighted_integral(*b, 1, 0.0).value == doctest::Approx(trap).epsilon(1e-8));

  const auto scaled = scale_profile(b, -3.0);
  CHECK(weighted_integral(*scaled, 2, 1.0).value ==
        doctest::Approx(9 * weighted_integral(*b, 2, 1.0).value).epsilon(1e-12));
}
