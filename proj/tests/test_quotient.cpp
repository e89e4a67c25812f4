#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/quotient.hpp"
#include "hrc/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace hrc;

namespace {

ProfilePtr bump() { return make_spline_profile({1.0, 1.25, 1.5, 1.75, 2.0}, {1.0}); }

// trapezoid in r for int |f^{(q)}|^2 r^power
double trap(const RadialProfile &f, int q, double power, int n = 400000) {
  const Interval s = f.support();
  const double h = (s.hi - s.lo) / n;
  double sum = 0;
  for (int i = 0; i <= n; ++i) {
    const double r = s.lo + i * h;
    const double v = f.derivative(q, r);
    sum += (i == 0 || i == n ? 0.5 : 1.0) * v * v * std::pow(r, power);
  }
  return sum * h;
}

} // namespace

TEST_CASE("zero profile") {
  const ModeFunction zero{3.0, make_spline_profile({1, 2, 3, 4, 5}, {0.0})};
  CHECK(mode_numerator(zero, 4, 0.0) == 0.0);
  CHECK(mode_denominator(zero, 4, 0.0) == 0.0);
  CHECK_THROWS_AS(hardy_rellich_quotient(std::span(&zero, 1), 4, 0.0), DegenerateInputError);
  CHECK_THROWS_AS(hardy_rellich_quotient({}, 4, 0.0), DegenerateInputError);
  CHECK(carre_du_champ_residual(zero, ConstantPotential{2.0}, 2, -2.0) == 0.0);
  const auto h = one_d_hardy_check(*zero.profile, 0.0);
  CHECK(h.lhs == 0.0);
  CHECK(h.rhs == 0.0);
  CHECK(h.holds);
}

TEST_CASE("denominator with power zero is the plain gradient energy") {
  const auto g = std::make_shared<CutoffProfile>(0.01);
  const double v = mode_denominator({0.0, g}, 3, 0.0);
  CHECK(v > 0);
  CHECK(v == doctest::Approx(weighted_integral(*g, 1, 0.0).value));
}

TEST_CASE("radial mode of h_eps, d = 4") {
  const auto h = minimizing_profile(1e-4, 4, 0.0, MinimizingBranch::radial_log);
  const ModeFunction m{0.0, h};
  CHECK(mode_numerator(m, 4, 0.0) ==
        doctest::Approx(weighted_integral(*h, 2, 3.0).value + 3 * weighted_integral(*h, 1, 1.0).value));
  std::vector<double> ratios;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const ModeFunction me{0.0, minimizing_profile(eps, 4, 0.0, MinimizingBranch::radial_log)};
    ratios.push_back(hardy_rellich_quotient(std::span(&me, 1), 4, 0.0).ratio);
  }
  CHECK(ratios[0] > ratios[1]);
  CHECK(ratios[1] > ratios[2]);
  CHECK(ratios[2] > 4.0);
  CHECK(ratios[2] < 4.4);
}

TEST_CASE("scaling invariance") {
  const ModeFunction a{2.0, bump()};
  const ModeFunction b{2.0, scale_profile(bump(), 7.0)};
  const double ra = hardy_rellich_quotient(std::span(&a, 1), 3, 0.0).ratio;
  const double rb = hardy_rellich_quotient(std::span(&b, 1), 3, 0.0).ratio;
  CHECK(rb == doctest::Approx(ra).epsilon(1e-12));
  CHECK(hardy_quotient(std::span(&b, 1), 3, 0.0).ratio ==
        doctest::Approx(hardy_quotient(std::span(&a, 1), 3, 0.0).ratio).epsilon(1e-12));
}

TEST_CASE("hardy quotient") {
  const ModeFunction g{0.0, std::make_shared<CutoffProfile>(0.01)};
  CHECK(hardy_quotient(std::span(&g, 1), 3, 0.0).ratio >= 0.25);

  const ModeFunction m{4.0, bump()};
  const auto q = hardy_quotient(std::span(&m, 1), 2, 0.0);
  const double num = trap(*m.profile, 1, 1.0) + 4.0 * trap(*m.profile, 0, -1.0);
  const double den = trap(*m.profile, 0, -1.0);
  CHECK(q.numerator == doctest::Approx(num).epsilon(1e-8));
  CHECK(q.denominator == doctest::Approx(den).epsilon(1e-8));
  CHECK(q.ratio >= 4.0);
}

TEST_CASE("second-order bracket against the direct integral") {
  const auto g = std::make_shared<CutoffProfile>(0.01);
  CHECK(mode_numerator({0.0, g}, 5, 1.0) ==
        doctest::Approx(trapezoid_second_order(*g, 0.0, 5, 1.0)).epsilon(1e-6));
  const auto b = bump();
  for (double l : {0.0, 2.0, 7.5})
    CHECK(mode_numerator({l, b}, 3, 0.5) ==
          doctest::Approx(trapezoid_second_order(*b, l, 3, 0.5)).epsilon(1e-6));
}

TEST_CASE("plateau part of the denominator") {
  const double eps = 1e-3;
  const auto f = minimizing_profile(eps, 5, 0.0, MinimizingBranch::power);
  const Interval plateau{2 * eps, 0.5 / eps};
  const double L = -std::log(4 * eps * eps);
  const double v = weighted_integral(*f, 1, 2.0, plateau).value +
                   weighted_integral(*f, 0, 0.0, plateau).value;
  CHECK(v == doctest::Approx(0.25 * L + L).epsilon(1e-10));
}

TEST_CASE("carre du champ") {
  const ModeFunction m{2.0, bump()};
  CHECK(carre_du_champ_residual(m, FreeLaplacian{}, 3, 0.0) <= 1e-10);
  const ModeFunction e{3.0, bump()};
  CHECK(carre_du_champ_residual(e, ConstantPotential{2.0}, 2, -2.0) <= 1e-8);
  CHECK_THROWS_AS(carre_du_champ_residual(m, AharonovBohm{0.5}, 2, 0.0), ArgumentError);
  CHECK_THROWS_AS(carre_du_champ_residual(m, ConstantPotential{3.0}, 2, 0.0), ArgumentError);
}

TEST_CASE("one-dimensional hardy") {
  const CutoffProfile g(0.01);
  CHECK(one_d_hardy_check(g, 0.0).holds);
  // lhs - rhs = int g'^2 r for the near optimiser r^{-1} g_eps at t = 1
  const auto f = minimizing_profile(1e-3, 6, 0.0, MinimizingBranch::power);
  const auto c = one_d_hardy_check(*f, 1.0);
  const CutoffProfile g3(1e-3);
  CHECK(c.lhs - c.rhs == doctest::Approx(weighted_integral(g3, 1, 1.0).value).epsilon(1e-8));
}

TEST_CASE("multi-mode totals") {
  const std::vector<ModeFunction> modes{{0.0, bump()}, {6.0, scale_profile(bump(), 0.5)}};
  const auto q = hardy_rellich_quotient(modes, 3, 0.0);
  CHECK(q.modes.size() == 2);
  CHECK(q.numerator == doctest::Approx(q.modes[0].numerator + q.modes[1].numerator));
  const AngularSpectrum part({0.0, 6.0}, SpectrumFamily::custom, false);
  CHECK(q.ratio >= hardy_rellich_constant(part, 3, 0.0).value);
}
