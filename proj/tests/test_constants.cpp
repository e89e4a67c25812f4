#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hrc;

namespace {

ProblemSpec problem(int d, double alpha, AngularOperator op = FreeLaplacian{}) {
  ProblemSpec p;
  p.d = d;
  p.alpha = alpha;
  p.angular = std::move(op);
  return p;
}

// independent brute force over an explicit list of eigenvalues
double oracle(const std::vector<double> &lambdas, int d, double alpha) {
  const double t = d - alpha - 4.0;
  double best = std::numeric_limits<double>::infinity();
  if (t == 0.0) {
    best = (d - 2.0) * (d - 2.0);
    for (double l : lambdas)
      if (l > 0)
        best = std::min(best, l);
    return best;
  }
  for (double l : lambdas)
    best = std::min(best, std::pow(4 * l + (d + alpha) * t, 2) / (4 * (4 * l + t * t)));
  return best;
}

} // namespace

TEST_CASE("mode function") {
  CHECK(mode_value(0.0, 5, 0.0) == doctest::Approx(6.25));
  for (int d : {2, 3, 6})
    for (double alpha : {-1.5, 0.5, 3.0})
      CHECK(mode_value(0.0, d, alpha) == doctest::Approx((d + alpha) * (d + alpha) / 4.0));
  CHECK(mode_value(2.0, 3, 1.0) == doctest::Approx(0.0));
  CHECK(mode_value(7.0, 4, 0.0) == 7.0);
  CHECK_THROWS_AS(mode_value(0.0, 4, 0.0), DomainError);
  CHECK_THROWS_AS(mode_value(-1.0, 3, 0.0), ArgumentError);
}

TEST_CASE("argmin of the mode function is a minimum") {
  for (int d : {2, 3, 5, 8})
    for (double alpha : {-3.0, -1.0, 0.5, 2.0, 5.0}) {
      if (is_degenerate(d, alpha))
        continue;
      const double x = mode_value_argmin(d, alpha);
      for (double l = 0; l < 50; l += 0.37)
        CHECK(mode_value(l, d, alpha) >= mode_value(x, d, alpha) - 1e-12);
    }
}

TEST_CASE("free constants") {
  CHECK(hardy_rellich_constant(problem(3, 0)).value == doctest::Approx(25.0 / 36.0).epsilon(1e-14));
  const auto c4 = hardy_rellich_constant(problem(4, 0));
  CHECK(c4.value == 3.0);
  CHECK(c4.branch == Branch::degenerate);
  CHECK(c4.argmin_index == 1u);
  ProblemSpec p = problem(2, 0);
  p.exclusion.indices = {1};
  CHECK(hardy_rellich_constant(p).value == doctest::Approx(1.0));
  CHECK(hardy_rellich_constant(problem(2, 0, AharonovBohm{0.5})).value == doctest::Approx(0.45));
}

TEST_CASE("truncated minimiser matches the oracle") {
  for (int d = 2; d <= 7; ++d)
    for (double alpha : {-2.0, 0.0, 1.0, d - 4.0, 4.5}) {
      const auto s = laplace_beltrami_spectrum(d, 300);
      const std::vector<double> l(s.eigenvalues().begin(), s.eigenvalues().end());
      CHECK(hardy_rellich_constant(problem(d, alpha)).value ==
            doctest::Approx(oracle(l, d, alpha)).epsilon(1e-13));
    }
}

TEST_CASE("explicit spectrum overloads") {
  const AngularSpectrum s({2.0, 5.0}, SpectrumFamily::custom, false);
  CHECK(hardy_rellich_constant(s, 4, 0.0).value == 2.0);
  CHECK(hardy_rellich_constant(s, 3, 0.0).value == doctest::Approx(oracle({2, 5}, 3, 0)));
  CHECK(hardy_constant(s, 3, 0.0).value == doctest::Approx(2.25));
  CHECK_THROWS_AS(hardy_rellich_constant(AngularSpectrum{}, 3, 0.0), ArgumentError);
}

TEST_CASE("hardy constants") {
  CHECK(hardy_constant(problem(2, 0, AharonovBohm{0.3})).value == doctest::Approx(0.09));
  for (int d = 3; d <= 8; ++d)
    CHECK(hardy_constant(problem(d, 0)).value == doctest::Approx((d - 2.0) * (d - 2.0) / 4));
  CHECK(hardy_constant(problem(3, 2, Monopole{0.5})).value == doctest::Approx(0.75));
}

TEST_CASE("rellich product, tables and special constants") {
  for (int d = 5; d <= 9; ++d)
    CHECK(rellich_product_constant(problem(d, 0)) ==
          doctest::Approx(d * d * (d - 4.0) * (d - 4.0) / 16));
  CHECK(rellich_product_constant(problem(2, 0, AharonovBohm{1.0})) == doctest::Approx(0.0));

  CHECK(classical_hardy_rellich_table(1) == 0.25);
  CHECK(classical_hardy_rellich_table(4) == 3.0);
  CHECK(classical_hardy_rellich_table(7) == 12.25);
  CHECK_THROWS_AS(classical_hardy_rellich_table(0), ArgumentError);

  CHECK(one_d_hardy_rellich_constant(0) == 0.25);
  CHECK(one_d_hardy_rellich_constant(-1) == 0.0);
  CHECK(one_d_hardy_rellich_constant(3) == 4.0);

  CHECK(rellich_p0(4) == 0.0);
  CHECK(rellich_p0(5) == 0.0);
  CHECK(rellich_p0(2) == -1.0);

  CHECK(evans_lewis_constant(2, 0.0) == 0.0);
  CHECK(evans_lewis_constant(2, 0.5) == doctest::Approx(0.5625));
  // d = 4: ((m+flux)^2 - 1)^2 over (m+flux)^2 >= 1
  double best = 1e300;
  for (int m = -50; m <= 50; ++m) {
    const double x = (m + 0.5) * (m + 0.5);
    if (x >= 1)
      best = std::min(best, (x - 1) * (x - 1));
  }
  CHECK(evans_lewis_constant(4, 0.5) == doctest::Approx(best));
  CHECK_THROWS_AS(evans_lewis_constant(3, 0.5), ArgumentError);
}

TEST_CASE("named families") {
  const auto e = named_constant(problem(2, 0, ConstantPotential{3.0}));
  CHECK(e.general.value == doctest::Approx(1.0));
  REQUIRE(e.specialised);
  CHECK(e.enforced);
  CHECK(named_constant(problem(2, 0, AharonovBohm{0.0})).general.value == doctest::Approx(0.0));
  const auto m = named_constant(problem(3, 0, Monopole{0.5}));
  CHECK(m.general.value == doctest::Approx(1.0 / 12));
  CHECK_FALSE(m.enforced);
  CHECK_FALSE(m.note.empty());
  CHECK_THROWS_AS(named_constant(problem(3, 0)), ArgumentError);
}

TEST_CASE("branch continuity near d - alpha - 4 = 0") {
  for (int d = 3; d <= 7; ++d) {
    const double at = hardy_rellich_constant(problem(d, d - 4.0)).value;
    CHECK(std::abs(hardy_rellich_constant(problem(d, d - 4.0 + 1e-6)).value - at) < 1e-4);
    CHECK(std::abs(hardy_rellich_constant(problem(d, d - 4.0 - 1e-6)).value - at) < 1e-4);
  }
}

TEST_CASE("circle operator needs enough resolution") {
  // a = 0 on a coarse grid: the minimiser lambda* is far beyond N/4 modes
  const ProblemSpec p = problem(2, -6.0, CirclePotential{std::vector<double>(8, 0.0)});
  CHECK_THROWS_AS(hardy_rellich_constant(p), ResolutionError);
}
