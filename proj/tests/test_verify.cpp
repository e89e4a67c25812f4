#include "hrc/errors.hpp"
#include "hrc/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace hrc;

TEST_CASE("splitmix64 stream") {
  // reference outputs of splitmix64 seeded with 0
  SplitMix64 r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFULL);
  CHECK(r.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 a(kDefaultSeed), b(kDefaultSeed);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("random bumps are admissible") {
  SplitMix64 rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_bump(rng);
    const Interval s = f->support();
    CHECK(s.lo >= 0.1);
    CHECK(s.hi <= 10.0);
    const auto k = f->breakpoints();
    for (std::size_t j = 1; j < k.size(); ++j)
      CHECK(k[j] - k[j - 1] >= 0.1);
  }
}

TEST_CASE("brute-force oracle") {
  CHECK(brute_force_constant(laplace_beltrami_spectrum(5, 200), 5, 0.0, 200) == 6.25);
  CHECK(brute_force_constant(laplace_beltrami_spectrum(3, 200), 3, 0.0, 2) ==
        doctest::Approx(25.0 / 36));
  CHECK(brute_force_constant(ab_spectrum(2, 0.5, 101), 2, 0.0, 101) == doctest::Approx(0.45));
  CHECK_THROWS_AS(brute_force_constant(laplace_beltrami_spectrum(3, 5), 3, 0.0, 0),
                  ArgumentError);
}

TEST_CASE("minimizing sweeps") {
  ProblemSpec p;
  p.d = 4;
  p.alpha = 0.0;
  const auto power = minimizing_sweep(p, {1e-2, 1e-3});
  CHECK(power.branch == MinimizingBranch::power);
  CHECK(power.eigenvalue == 3.0);
  CHECK(power.constant == 3.0);
  CHECK(power.monotone);

  const auto radial = minimizing_sweep(p, {1e-2, 1e-3}, MinimizingBranch::radial_log);
  CHECK(radial.constant == 4.0);
  CHECK(radial.monotone);

  p.d = 6;
  p.alpha = 2.0;
  CHECK(minimizing_sweep(p, {1e-2}).constant == 5.0);

  p.d = 5;
  p.alpha = 0.0;
  CHECK_THROWS_AS(minimizing_sweep(p, {1e-2}, MinimizingBranch::radial_log), ArgumentError);
  CHECK_THROWS_AS(minimizing_sweep(p, {1e-3, 1e-2}), ArgumentError);
  CHECK_THROWS_AS(minimizing_sweep(p, {0.6}), ArgumentError);
  CHECK_THROWS_AS(minimizing_sweep(p, {}), ArgumentError);
}

TEST_CASE("suites") {
  CHECK(is_suite("constants"));
  CHECK_FALSE(is_suite("bogus"));
  CHECK_THROWS_AS(run_suite("bogus"), ArgumentError);
  const auto a = run_suite("constants");
  CHECK(a.pass);
  const auto b = run_suite("constants");
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].name == b.records[i].name);
    CHECK(a.records[i].actual == b.records[i].actual);
  }
  CHECK(run_suite("spectra").pass);
}
