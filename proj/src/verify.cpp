#include "hrc/verify.hpp"

#include "hrc/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <tuple>
#include <limits>
#include <numbers>

namespace hrc {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::size_t SplitMix64::below(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

ProfilePtr random_bump(SplitMix64 &rng) {
  const std::size_t n = 1 + rng.below(4);
  std::vector<double> knots(n + 4);
  for (;;) {
    for (auto &k : knots)
      k = rng.uniform(0.1, 10.0);
    std::sort(knots.begin(), knots.end());
    bool spaced = true;
    for (std::size_t i = 1; i < knots.size(); ++i)
      spaced = spaced && knots[i] - knots[i - 1] >= 0.1;
    if (spaced)
      break;
  }
  std::vector<double> coeffs(n);
  for (auto &c : coeffs)
    c = rng.uniform(-1.0, 1.0);
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](double c) { return std::abs(c) < 0.05; }))
    coeffs[0] = 1.0;
  return make_spline_profile(std::move(knots), std::move(coeffs));
}

double brute_force_constant(const AngularSpectrum &spectrum, int d, double alpha,
                            std::size_t window) {
  if (window < 1)
    throw ArgumentError("window must be >= 1");
  const std::size_t n = std::min(window, spectrum.size());
  const double t = d - alpha - 4.0;
  double best = std::numeric_limits<double>::infinity();
  if (std::abs(t) <= 1e-12) {
    best = (d - 2.0) * (d - 2.0);
    for (std::size_t i = 0; i < n; ++i)
      if (spectrum[i] > 1e-12)
        best = std::min(best, spectrum[i]);
    return best;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double l = spectrum[i];
    const double top = 4.0 * l + (d + alpha) * t;
    best = std::min(best, top * top / (4.0 * (4.0 * l + t * t)));
  }
  return best;
}

double trapezoid_second_order(const RadialProfile &f, double lambda, int d,
                              double alpha, std::size_t points) {
  const Interval s = f.support();
  if (!(s.lo > 0.0))
    throw ArgumentError("trapezoid oracle needs support away from the origin");
  std::vector<double> cuts{s.lo, s.hi};
  for (double b : f.breakpoints())
    if (b > s.lo && b < s.hi)
      cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double power = d - alpha - 1.0;
  // integrand times r, as a function of r: we integrate in s = ln r
  auto g = [&](double r) {
    const double lf = -f.second_derivative(r) - (d - 1.0) * f.first_derivative(r) / r +
                      lambda * f.value(r) / (r * r);
    return lf * lf * std::pow(r, power) * r;
  };

  const double total = std::log(s.hi / s.lo);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = std::log(cuts[i]);
    const double b = std::log(cuts[i + 1]);
    const auto m = std::max<std::size_t>(
        16, static_cast<std::size_t>(std::llround(points * (b - a) / total)));
    const double h = (b - a) / static_cast<double>(m);
    double piece = 0.5 * (g(cuts[i]) + g(cuts[i + 1]));
    for (std::size_t j = 1; j < m; ++j)
      piece += g(std::exp(a + h * static_cast<double>(j)));
    sum += piece * h;
  }
  return sum;
}

const std::vector<double> &default_epsilons() {
  static const std::vector<double> eps{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  return eps;
}

namespace {

double smallest_nonzero(const ProblemSpec &p) {
  std::size_t count = 64;
  if (auto limit = max_enumeration(p.angular))
    count = *limit;
  for (;;) {
    const AngularSpectrum s = enumerate_spectrum(p.angular, p.d, count);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!p.exclusion.contains(i) && s[i] > kZeroEigenvalue)
        return s[i];
    if (max_enumeration(p.angular))
      throw ResolutionError("no nonzero eigenvalue within the resolved spectrum");
    count *= 2;
  }
}

} // namespace

SweepTable minimizing_sweep(const ProblemSpec &p, const std::vector<double> &epsilons,
                            std::optional<MinimizingBranch> forced) {
  if (epsilons.empty())
    throw ArgumentError("epsilon list is empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0 && epsilons[i] < 0.5))
      throw ArgumentError("epsilon must lie in (0, 1/2)");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw ArgumentError("epsilon list must be strictly decreasing");
  }

  const ConstantResult c = hardy_rellich_constant(p);
  const bool degenerate = c.branch == Branch::degenerate;
  const bool radial = degenerate && c.argmin_eigenvalue <= kZeroEigenvalue;

  SweepTable table;
  table.branch = forced.value_or(radial ? MinimizingBranch::radial_log
                                        : MinimizingBranch::power);
  if (table.branch == MinimizingBranch::radial_log) {
    if (!degenerate)
      throw ArgumentError("the radial-log profile needs d - alpha - 4 = 0");
    table.eigenvalue = 0.0;
    table.constant = (p.d - 2.0) * (p.d - 2.0);
  } else if (radial) {
    // power branch forced where the constant is the radial one: follow the
    // first nonzero mode instead, whose limit is its eigenvalue
    table.eigenvalue = smallest_nonzero(p);
    table.constant = table.eigenvalue;
  } else {
    table.eigenvalue = c.argmin_eigenvalue;
    table.constant = c.value;
  }

  for (double eps : epsilons) {
    const ModeFunction mode{table.eigenvalue,
                            minimizing_profile(eps, p.d, p.alpha, table.branch)};
    const QuotientReport q = hardy_rellich_quotient(std::span(&mode, 1), p.d, p.alpha);
    SweepRow row;
    row.epsilon = eps;
    row.ratio = q.ratio;
    row.constant = table.constant;
    row.gap = q.ratio - table.constant;
    row.gap_times_log = row.gap * std::abs(std::log(4.0 * eps * eps));
    table.rows.push_back(row);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow &r = table.rows[i];
    if (i > 0 && !(r.ratio < table.rows[i - 1].ratio))
      table.monotone = false;
    if (!(r.gap > 0.0))
      table.law = false;
    lo = std::min(lo, r.gap_times_log);
    hi = std::max(hi, r.gap_times_log);
  }
  if (table.law && !(hi < 4.0 * lo))
    table.law = false;
  return table;
}

// ---------------------------------------------------------------------------
// check helpers

namespace {

std::string strf(const char *fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// |actual - expected| <= tol * max(1, |expected|)
CheckRecord near(std::string name, double expected, double actual, double tol) {
  const bool ok = std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
  return {std::move(name), expected, actual, tol, ok};
}

// |actual - expected| <= tol * |expected|
CheckRecord relative(std::string name, double expected, double actual, double tol) {
  const bool ok = std::abs(actual - expected) <= tol * std::abs(expected);
  return {std::move(name), expected, actual, tol, ok};
}

CheckRecord flag(std::string name, bool ok) {
  return {std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, ok};
}

// Runs `body`, turning an escaped exception into a failed record.
template <typename Body>
void guarded(std::vector<CheckRecord> &out, const std::string &name, Body body) {
  try {
    body();
  } catch (const std::exception &e) {
    out.push_back({name + " threw: " + e.what(), 0.0,
                   std::numeric_limits<double>::quiet_NaN(), 0.0, false});
  }
}

void append(std::vector<CheckRecord> &into, std::vector<CheckRecord> from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
}

ProblemSpec problem(int d, double alpha, AngularOperator op = FreeLaplacian{}) {
  ProblemSpec p;
  p.d = d;
  p.alpha = alpha;
  p.angular = std::move(op);
  return p;
}

double dist_to_integers(double x) {
  return std::abs(x - std::round(x));
}

std::vector<double> constant_samples(double a, std::size_t n) {
  return std::vector<double>(n, a);
}

std::vector<double> cosine_samples(std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j)
    s[j] = 2.0 + std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                          static_cast<double>(n));
  return s;
}

// k^2 + a with the multiplicity 2 of k >= 1, computed by listing m in Z.
std::vector<double> circle_oracle(double a, std::size_t count) {
  std::vector<double> v;
  const int reach = static_cast<int>(count);
  for (int m = -reach; m <= reach; ++m)
    v.push_back(static_cast<double>(m) * m + a);
  std::sort(v.begin(), v.end());
  v.resize(count);
  return v;
}

} // namespace

// ---------------------------------------------------------------------------
// acceptance batteries

std::vector<CheckRecord> closed_form_checks() {
  std::vector<CheckRecord> out;
  guarded(out, "closed forms", [&] {
    out.push_back(near("C(1,0) = 1/4", 0.25, mode_value(0.0, 1, 0.0), 1e-12));
    out.push_back(
        near("C(1,0) 1D formula", 0.25, one_d_hardy_rellich_constant(0.0), 1e-12));
    out.push_back(near("C(2,0) = 0", 0.0, hardy_rellich_constant(problem(2, 0)).value,
                       1e-12));
    out.push_back(near("C(3,0) = 25/36", 25.0 / 36.0,
                       hardy_rellich_constant(problem(3, 0)).value, 1e-12));
    out.push_back(
        near("C(4,0) = 3", 3.0, hardy_rellich_constant(problem(4, 0)).value, 1e-12));
    for (int d = 5; d <= 10; ++d)
      out.push_back(near(strf("C(%d,0) = d^2/4", d), d * d / 4.0,
                         hardy_rellich_constant(problem(d, 0)).value, 1e-12));
    ProblemSpec restricted = problem(2, 0);
    restricted.exclusion.indices = {1};
    out.push_back(near("C(2,0) without k=1 = 1", 1.0,
                       hardy_rellich_constant(restricted).value, 1e-12));
  });
  return out;
}

std::vector<CheckRecord> electric_checks() {
  std::vector<CheckRecord> out;
  for (double a : {2.0, 3.0, 10.0}) {
    const std::string name = strf("C_a, a = %g", a);
    guarded(out, name, [&] {
      const NamedConstantResult r = named_constant(problem(2, 0, ConstantPotential{a}));
      out.push_back(near(name, (a - 1.0) * (a - 1.0) / (a + 1.0), r.general.value, 1e-12));
    });
  }
  return out;
}

std::vector<CheckRecord> ab_hardy_checks() {
  std::vector<CheckRecord> out;
  for (double flux : {0.1, 0.3, 0.5, 0.9}) {
    const std::string name = strf("AB Hardy C_D(2,0), flux = %g", flux);
    guarded(out, name, [&] {
      const double dist = dist_to_integers(flux);
      out.push_back(near(name, dist * dist,
                         hardy_constant(problem(2, 0, AharonovBohm{flux})).value, 1e-12));
    });
  }
  return out;
}

std::vector<CheckRecord> oracle_grid_checks() {
  struct Family {
    std::string name;
    AngularOperator op;
  };
  const std::vector<Family> families{
      {"free", FreeLaplacian{}},
      {"electric-const a=0.5", ConstantPotential{0.5}},
      {"electric-const a=2", ConstantPotential{2.0}},
      {"electric-const a=10", ConstantPotential{10.0}},
      {"ab flux=0.1", AharonovBohm{0.1}},
      {"ab flux=0.5", AharonovBohm{0.5}},
      {"ab flux=0.75", AharonovBohm{0.75}},
      {"monopole g=0.5", Monopole{0.5}},
      {"monopole g=1", Monopole{1.0}},
      {"monopole g=1.5", Monopole{1.5}},
  };
  constexpr std::size_t window = 200;
  std::vector<CheckRecord> out;
  for (const auto &fam : families) {
    const std::string name = "oracle agreement " + fam.name;
    guarded(out, name, [&] {
      const bool monopole = std::holds_alternative<Monopole>(fam.op);
      double worst = 0.0;
      int cases = 0;
      for (int d = monopole ? 3 : 2; d <= (monopole ? 3 : 8); ++d) {
        std::vector<double> alphas{-3, -1, 0, 1, 2, 3};
        if (std::find(alphas.begin(), alphas.end(), d - 4.0) == alphas.end())
          alphas.push_back(d - 4.0);
        const AngularSpectrum s = enumerate_spectrum(fam.op, d, window);
        for (double alpha : alphas) {
          const ProblemSpec p = problem(d, alpha, fam.op);
          const double fast = hardy_rellich_constant(p).value;
          const double slow = brute_force_constant(s, d, alpha, window);
          worst = std::max(worst, std::abs(fast - slow) / std::max(1.0, std::abs(slow)));
          ++cases;
        }
      }
      out.push_back({strf("%s (%d cases, max rel diff)", name.c_str(), cases), 0.0,
                     worst, 1e-12, worst <= 1e-12});
    });
  }
  return out;
}

namespace {

struct SweepCase {
  ProblemSpec p;
  std::optional<MinimizingBranch> forced;
  std::string tag;
};

void sweep_law_records(std::vector<CheckRecord> &out, const SweepCase &c,
                       bool final_gap) {
  guarded(out, c.tag, [&] {
    const SweepTable t = minimizing_sweep(c.p, default_epsilons(), c.forced);
    if (!c.forced)
      out.push_back(near(c.tag + " limit is C(d,alpha)", hardy_rellich_constant(c.p).value,
                         t.constant, 1e-12));
    out.push_back(flag(c.tag + " strictly decreasing", t.monotone));
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto &r : t.rows) {
      lo = std::min(lo, r.gap_times_log);
      hi = std::max(hi, r.gap_times_log);
    }
    out.push_back({c.tag + " gap*|ln 4eps^2| spread < 4", 4.0, hi / lo, 0.0, t.law});
    if (final_gap) {
      const double last = t.rows.back().ratio;
      out.push_back({c.tag + " final ratio within 10%", t.constant, last, 0.1,
                     last >= t.constant && last <= 1.1 * t.constant});
    }
  });
}

} // namespace

std::vector<CheckRecord> sweep_checks() {
  std::vector<CheckRecord> out;
  for (const auto &[d, alpha] : std::vector<std::pair<int, double>>{{5, 0.0}, {3, 0.0}, {6, 2.0}})
    sweep_law_records(out, {problem(d, alpha), std::nullopt, strf("sweep (%d,%g)", d, alpha)},
                      true);
  return out;
}

std::vector<CheckRecord> sweep_law_checks() {
  std::vector<CheckRecord> out;
  const std::vector<SweepCase> cases{
      {problem(5, 0), std::nullopt, "sweep (5,0)"},
      {problem(3, 0), std::nullopt, "sweep (3,0)"},
      {problem(6, 2), std::nullopt, "sweep (6,2)"},
      {problem(4, 0), std::nullopt, "sweep (4,0)"},
      {problem(4, 0), MinimizingBranch::radial_log, "sweep (4,0) radial-log"},
      {problem(2, 0, AharonovBohm{0.5}), std::nullopt, "sweep ab (2,0) flux=0.5"},
      {problem(2, 0, ConstantPotential{3.0}), std::nullopt, "sweep electric (2,0) a=3"},
  };
  for (const auto &c : cases)
    sweep_law_records(out, c, false);
  return out;
}

std::vector<CheckRecord> plateau_checks() {
  std::vector<CheckRecord> out;
  constexpr double eps = 1e-3;
  const double log_term = -std::log(4.0 * eps * eps);
  const Interval plateau{2.0 * eps, 0.5 / eps};
  const std::vector<std::pair<int, double>> cases{{5, 0.0}, {3, 0.0}, {8, 1.0}, {7, -1.5}};
  for (const auto &[d, alpha] : cases) {
    const std::string tag = strf("plateau (%d,%g)", d, alpha);
    guarded(out, tag, [&] {
      const ProfilePtr f = minimizing_profile(eps, d, alpha, MinimizingBranch::power);
      const double t = d - alpha - 4.0;
      const double u = d - alpha - 2.0;
      out.push_back(relative(tag + " |f''|^2 r^{d-a-1}", t * t / 4.0 * u * u / 4.0 * log_term,
                             weighted_integral(*f, 2, d - alpha - 1.0, plateau).value,
                             1e-9));
      out.push_back(relative(tag + " |f'|^2 r^{d-a-3}", t * t / 4.0 * log_term,
                             weighted_integral(*f, 1, d - alpha - 3.0, plateau).value,
                             1e-9));
      out.push_back(relative(tag + " |f|^2 r^{d-a-5}", log_term,
                             weighted_integral(*f, 0, d - alpha - 5.0, plateau).value,
                             1e-9));
    });
  }
  return out;
}

std::vector<CheckRecord> lemma_checks(std::uint64_t seed) {
  std::vector<CheckRecord> out;
  SplitMix64 rng(seed);
  const std::vector<std::pair<int, double>> dims{{3, 0.0}, {5, 1.0}, {4, 0.5}, {2, -1.0}};
  for (int i = 0; i < 10; ++i) {
    const ProfilePtr f = random_bump(rng);
    const auto [d, alpha] = dims[static_cast<std::size_t>(i) % dims.size()];
    for (double lambda : {0.0, 2.0, 7.5}) {
      const std::string name =
          strf("second-order bracket vs trapezoid, bump %d, d=%d alpha=%g lambda=%g", i, d,
               alpha, lambda);
      guarded(out, name, [&] {
        const double bracket = mode_numerator({lambda, f}, d, alpha);
        out.push_back(relative(name, trapezoid_second_order(*f, lambda, d, alpha), bracket,
                               1e-6));
      });
    }
  }
  return out;
}

namespace {

struct RandomFamily {
  std::string name;
  // draws an operator and a compatible dimension
  std::function<std::pair<AngularOperator, int>(SplitMix64 &)> draw;
};

std::vector<RandomFamily> random_families() {
  return {
      {"free",
       [](SplitMix64 &rng) {
         return std::pair<AngularOperator, int>{FreeLaplacian{},
                                                2 + static_cast<int>(rng.below(7))};
       }},
      {"electric-const",
       [](SplitMix64 &rng) {
         const double a = rng.uniform(0.0, 5.0);
         return std::pair<AngularOperator, int>{ConstantPotential{a},
                                                2 + static_cast<int>(rng.below(7))};
       }},
      {"electric-profile",
       [](SplitMix64 &rng) {
         const double c0 = rng.uniform(1.0, 3.0);
         const double c1 = rng.uniform(-c0 / 3.0, c0 / 3.0);
         const double c2 = rng.uniform(-c0 / 3.0, c0 / 3.0);
         constexpr std::size_t n = 96;
         std::vector<double> s(n);
         for (std::size_t j = 0; j < n; ++j) {
           const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
           s[j] = c0 + c1 * std::cos(th) + c2 * std::sin(2.0 * th);
         }
         return std::pair<AngularOperator, int>{CirclePotential{std::move(s)}, 2};
       }},
      {"ab",
       [](SplitMix64 &rng) {
         const double flux = rng.uniform();
         return std::pair<AngularOperator, int>{AharonovBohm{flux},
                                                2 + static_cast<int>(rng.below(5))};
       }},
      {"monopole",
       [](SplitMix64 &rng) {
         const double g = 0.5 * static_cast<double>(1 + rng.below(4));
         return std::pair<AngularOperator, int>{Monopole{g}, 3};
       }},
  };
}

} // namespace

std::vector<CheckRecord> inequality_checks(std::uint64_t seed) {
  std::vector<CheckRecord> out;
  SplitMix64 rng(seed ^ 0xA5A5A5A5ULL);
  constexpr int kSets = 100;
  constexpr double kSlack = 1e-6;
  for (const auto &fam : random_families()) {
    const std::string tag = "inequality " + fam.name;
    guarded(out, tag, [&] {
      double hr_margin = std::numeric_limits<double>::infinity();
      double hardy_margin = std::numeric_limits<double>::infinity();
      bool hr_ok = true, hardy_ok = true, strict = true;
      for (int set = 0; set < kSets; ++set) {
        auto [op, d] = fam.draw(rng);
        const AngularSpectrum s = enumerate_spectrum(op, d, 20);
        const double alpha = rng.uniform(-2.0, 3.0);
        const double beta = rng.uniform(-2.0, 3.0);
        const std::size_t count = 1 + rng.below(3);
        std::vector<ModeFunction> modes;
        std::vector<double> used;
        for (std::size_t m = 0; m < count; ++m) {
          const double l = s[rng.below(12)];
          modes.push_back({l, random_bump(rng)});
          used.push_back(l);
        }
        std::sort(used.begin(), used.end());
        const AngularSpectrum part(used, SpectrumFamily::custom, false);

        const double c = hardy_rellich_constant(part, d, alpha).value;
        const double r = hardy_rellich_quotient(modes, d, alpha).ratio;
        hr_ok = hr_ok && r >= c * (1.0 - kSlack);
        strict = strict && r > c + kSlack * std::max(1.0, c);
        hr_margin = std::min(hr_margin, (r - c) / std::max(1.0, c));

        const double cd = hardy_constant(part, d, beta).value;
        const double rd = hardy_quotient(modes, d, beta).ratio;
        hardy_ok = hardy_ok && rd >= cd * (1.0 - kSlack);
        strict = strict && rd > cd + kSlack * std::max(1.0, cd);
        hardy_margin = std::min(hardy_margin, (rd - cd) / std::max(1.0, cd));
      }
      out.push_back({tag + " Hardy-Rellich (min relative margin)", 0.0, hr_margin, kSlack,
                     hr_ok});
      out.push_back({tag + " Hardy (min relative margin)", 0.0, hardy_margin, kSlack,
                     hardy_ok});
      out.push_back(flag(tag + " no equality within 1e-6", strict));
    });
  }
  return out;
}

std::vector<CheckRecord> circle_checks() {
  std::vector<CheckRecord> out;
  for (double a : {0.0, 2.0, 3.5}) {
    const std::string name = strf("circle constant a = %g, N = 256, first 10", a);
    guarded(out, name, [&] {
      const auto samples = constant_samples(a, 256);
      const AngularSpectrum s = circle_schrodinger_spectrum(samples, 10);
      const auto expect = circle_oracle(a, 10);
      double worst = 0.0;
      for (std::size_t i = 0; i < 10; ++i)
        worst = std::max(worst, std::abs(s[i] - expect[i]));
      out.push_back({name + " (max abs diff)", 0.0, worst, 1e-8, worst <= 1e-8});
    });
  }
  guarded(out, "circle 2 + cos", [&] {
    const auto coarse = circle_schrodinger_spectrum(cosine_samples(128), 10);
    const auto fine = circle_schrodinger_spectrum(cosine_samples(256), 10);
    double worst = 0.0;
    for (std::size_t i = 0; i < 10; ++i)
      worst = std::max(worst, std::abs(coarse[i] - fine[i]));
    out.push_back({"circle 2 + cos, N = 128 vs 256 (max abs diff)", 0.0, worst, 1e-6,
                   worst <= 1e-6});
    out.push_back({"circle 2 + cos, mu_0 >= min a = 1", 1.0, fine[0], 0.0, fine[0] >= 1.0});
  });
  return out;
}

std::vector<CheckRecord> monopole_checks() {
  std::vector<CheckRecord> out;
  guarded(out, "monopole", [&] {
    const NamedConstantResult r = named_constant(problem(3, 0, Monopole{0.5}));
    const double oracle = brute_force_constant(monopole_spectrum(0.5, 200), 3, 0.0, 200);
    out.push_back(near("monopole C(3,0), g = 1/2 vs window-200 oracle", oracle,
                       r.general.value, 1e-12));
    out.push_back(near("monopole C(3,0), g = 1/2 = 1/12", 1.0 / 12.0, r.general.value, 1e-12));
  });
  return out;
}

std::vector<CheckRecord> carre_du_champ_checks(std::uint64_t seed) {
  std::vector<CheckRecord> out;
  SplitMix64 rng(seed ^ 0xCDCDULL);
  for (int d : {2, 3}) {
    for (double a : {0.0, 2.0}) {
      for (double beta : {-2.0, 0.0, 1.0}) {
        const std::string name = strf("Carre du Champ residual d=%d a=%g beta=%g", d, a, beta);
        guarded(out, name, [&] {
          const double k = static_cast<double>(rng.below(4));
          const ModeFunction m{k * (k + d - 2.0) + a, random_bump(rng)};
          const double res = carre_du_champ_residual(m, ConstantPotential{a}, d, beta);
          out.push_back({name, 0.0, res, 1e-8, res <= 1e-8});
        });
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// property batteries

std::vector<CheckRecord> spectra_property_checks() {
  std::vector<CheckRecord> out;
  const std::vector<std::pair<std::string, std::pair<AngularOperator, int>>> ops{
      {"free d=2", {FreeLaplacian{}, 2}},
      {"free d=5", {FreeLaplacian{}, 5}},
      {"electric-const a=1.5 d=3", {ConstantPotential{1.5}, 3}},
      {"ab flux=0.3 d=2", {AharonovBohm{0.3}, 2}},
      {"ab flux=0.3 d=4", {AharonovBohm{0.3}, 4}},
      {"monopole g=1", {Monopole{1.0}, 3}},
      {"electric-profile 2+cos", {CirclePotential{cosine_samples(128)}, 2}},
  };
  for (const auto &[name, opd] : ops) {
    guarded(out, name, [&] {
      const auto &[op, d] = opd;
      const AngularSpectrum small = enumerate_spectrum(op, d, 10);
      const AngularSpectrum big = enumerate_spectrum(op, d, 30);
      double worst = 0.0;
      for (std::size_t i = 0; i < small.size(); ++i)
        worst = std::max(worst, std::abs(small[i] - big[i]));
      const double tol = std::holds_alternative<CirclePotential>(op) ? 1e-10 : 0.0;
      out.push_back({"prefix consistency " + name, 0.0, worst, tol, worst <= tol});
      const double lowest = *std::min_element(big.eigenvalues().begin(), big.eigenvalues().end());
      out.push_back({"non-negative " + name, 0.0, lowest, 1e-12, lowest >= -1e-12});
    });
  }
  for (int d = 2; d <= 6; ++d) {
    const std::string name = strf("ab flux=0 reduces to free, d=%d", d);
    guarded(out, name, [&] {
      const AngularSpectrum ab = ab_spectrum(d, 0.0, 40);
      std::vector<double> distinct(ab.eigenvalues().begin(), ab.eigenvalues().end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      const AngularSpectrum free = laplace_beltrami_spectrum(d, distinct.size());
      double worst = 0.0;
      for (std::size_t i = 0; i < distinct.size(); ++i)
        worst = std::max(worst, std::abs(distinct[i] - free[i]));
      out.push_back({name, 0.0, worst, 0.0, worst == 0.0});
    });
  }
  guarded(out, "circle vs shifted", [&] {
    const double a = 1.25;
    const double c_circle =
        hardy_rellich_constant(problem(2, 0.5, CirclePotential{constant_samples(a, 128)})).value;
    const double c_shift = hardy_rellich_constant(problem(2, 0.5, ConstantPotential{a})).value;
    out.push_back(near("circle solver constant potential matches k^2 + a constant", c_shift,
                       c_circle, 1e-8));
  });
  return out;
}

std::vector<CheckRecord> constant_property_checks() {
  std::vector<CheckRecord> out;
  for (int d = 3; d <= 7; ++d) {
    const std::string name = strf("branch continuity d=%d", d);
    guarded(out, name, [&] {
      const double at = hardy_rellich_constant(problem(d, d - 4.0)).value;
      for (double delta : {-1e-6, 1e-6}) {
        const double off = hardy_rellich_constant(problem(d, d - 4.0 + delta)).value;
        out.push_back(near(strf("%s, alpha = d-4%+g", name.c_str(), delta), at, off, 1e-4));
      }
    });
  }
  for (int d = 2; d <= 6; ++d) {
    for (double alpha : {-1.0, 0.0, 2.0}) {
      const std::string name = strf("exclusion monotone d=%d alpha=%g", d, alpha);
      guarded(out, name, [&] {
        const double base = hardy_rellich_constant(problem(d, alpha)).value;
        double worst = std::numeric_limits<double>::infinity();
        for (const std::set<std::size_t> &ex :
             {std::set<std::size_t>{1}, std::set<std::size_t>{0, 1}, std::set<std::size_t>{2}}) {
          ProblemSpec p = problem(d, alpha);
          p.exclusion.indices = ex;
          worst = std::min(worst, hardy_rellich_constant(p).value - base);
        }
        out.push_back({name + " (min increase)", 0.0, worst, 1e-12, worst >= -1e-12});
      });
    }
  }
  for (const auto &[name, op, d] :
       std::vector<std::tuple<std::string, AngularOperator, int>>{
           {"free", FreeLaplacian{}, 4},
           {"ab flux=0.4", AharonovBohm{0.4}, 2},
           {"monopole g=1.5", Monopole{1.5}, 3}}) {
    guarded(out, "hardy argmin " + name, [&] {
      const ConstantResult r = hardy_constant(problem(d, 0.5, op));
      out.push_back(flag("hardy argmin at index 0, " + name, r.argmin_index == 0u));
    });
  }
  guarded(out, "named values", [&] {
    out.push_back(near("Rellich product d=5", 25.0 / 16.0,
                       rellich_product_constant(problem(5, 0)), 1e-12));
    out.push_back(near("p0 d=2", -1.0, rellich_p0(2), 1e-12));
    out.push_back(near("p0 d=5", 0.0, rellich_p0(5), 1e-12));
    out.push_back(near("Evans-Lewis d=2 flux=0.5", 0.5625, evans_lewis_constant(2, 0.5), 1e-12));
    out.push_back(near("Evans-Lewis d=4 flux=0.5", 1.5625, evans_lewis_constant(4, 0.5), 1e-12));
    out.push_back(near("1D constant alpha=2", 2.25, one_d_hardy_rellich_constant(2.0), 1e-12));
  });
  for (double flux : {0.0, 1.0}) {
    const std::string name = strf("ab d=2 integer flux %g without (m+flux)^2 = 1", flux);
    guarded(out, name, [&] {
      ProblemSpec p = problem(2, 0, AharonovBohm{flux});
      const AngularSpectrum s = enumerate_spectrum(p.angular, 2, 40);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (std::abs(s[i] - 1.0) < 1e-12)
          p.exclusion.indices.insert(i);
      out.push_back(near(name, 1.0, hardy_rellich_constant(p).value, 1e-12));
    });
  }
  return out;
}

std::vector<CheckRecord> quotient_property_checks(std::uint64_t seed) {
  std::vector<CheckRecord> out;
  SplitMix64 rng(seed ^ 0x51ULL);
  guarded(out, "scaling", [&] {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const ProfilePtr f = random_bump(rng);
      const ModeFunction m{3.0, f};
      const double r1 = hardy_rellich_quotient(std::span(&m, 1), 4, 0.5).ratio;
      const double h1 = hardy_quotient(std::span(&m, 1), 4, 0.5).ratio;
      for (double kappa : {7.0, -3.0}) {
        const ModeFunction s{3.0, scale_profile(f, kappa)};
        worst = std::max(worst, std::abs(hardy_rellich_quotient(std::span(&s, 1), 4, 0.5).ratio - r1) / r1);
        worst = std::max(worst, std::abs(hardy_quotient(std::span(&s, 1), 4, 0.5).ratio - h1) / h1);
      }
    }
    out.push_back({"scaling invariance (max rel diff)", 0.0, worst, 1e-10, worst <= 1e-10});
  });
  guarded(out, "totals", [&] {
    std::vector<ModeFunction> modes{{0.0, random_bump(rng)}, {3.0, random_bump(rng)},
                                    {8.0, random_bump(rng)}};
    const QuotientReport q = hardy_rellich_quotient(modes, 3, 0.0);
    double num = 0.0, den = 0.0;
    for (const auto &m : modes) {
      num += mode_numerator(m, 3, 0.0);
      den += mode_denominator(m, 3, 0.0);
    }
    out.push_back(relative("multi-mode numerator is the per-mode sum", num, q.numerator, 1e-12));
    out.push_back(relative("multi-mode denominator is the per-mode sum", den, q.denominator, 1e-12));
  });
  guarded(out, "empty", [&] {
    bool threw = false;
    try {
      hardy_rellich_quotient({}, 3, 0.0);
    } catch (const DegenerateInputError &) {
      threw = true;
    }
    out.push_back(flag("empty mode list is rejected", threw));
  });
  guarded(out, "oracle example", [&] {
    const ProfilePtr g = std::make_shared<CutoffProfile>(0.01);
    out.push_back(relative("numerator of g_0.01 (d=5, alpha=1) vs trapezoid",
                           trapezoid_second_order(*g, 0.0, 5, 1.0),
                           mode_numerator({0.0, g}, 5, 1.0), 1e-6));
    const ModeFunction m{0.0, g};
    const double r = hardy_quotient(std::span(&m, 1), 3, 0.0).ratio;
    out.push_back({"Hardy ratio of g_0.01 (d=3) >= 1/4", 0.25, r, 0.0, r >= 0.25});
  });
  guarded(out, "1D Hardy", [&] {
    const CutoffProfile g(0.01);
    const HardyCheck h = one_d_hardy_check(g, 0.0);
    out.push_back(flag("1D Hardy holds for g_0.01, t=0", h.holds));
    // r^{-(t+1)/2} g_eps for t = 1 is the power profile with d - alpha - 4 = 2.
    // Here lhs - rhs = int g'^2 r exactly, and each transition layer costs at
    // least 1/ln 2, so the gap cannot drop below 2/(ln 2 rhs).
    bool decreasing = true, above_bound = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const ProfilePtr f = minimizing_profile(eps, 6, 0.0, MinimizingBranch::power);
      const HardyCheck n = one_d_hardy_check(*f, 1.0);
      const double q = n.lhs / n.rhs;
      decreasing = decreasing && n.holds && q < prev;
      above_bound = above_bound && q - 1.0 >= 2.0 / (std::numbers::ln2 * n.rhs) * (1.0 - 1e-9);
      prev = q;
    }
    out.push_back({"1D Hardy near-optimiser lhs/rhs decreasing in eps", 1.0, prev, 0.0,
                   decreasing});
    out.push_back(flag("1D Hardy near-optimiser gap above the layer lower bound", above_bound));
  });
  return out;
}

std::vector<CheckRecord> radial_property_checks() {
  std::vector<CheckRecord> out;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const std::string name = strf("cutoff bounds eps=%g", eps);
    guarded(out, name, [&] {
      const CutoffProfile g(eps);
      const double c = g.bound_constant();
      double inner1 = 0, inner2 = 0, outer1 = 0, outer2 = 0;
      for (int i = 0; i <= 2000; ++i) {
        const double u = i / 2000.0;
        const double ri = eps * (1.0 + u);
        const double ro = 0.5 / eps * (1.0 + u);
        inner1 = std::max(inner1, std::abs(g.first_derivative(ri)) * eps);
        inner2 = std::max(inner2, std::abs(g.second_derivative(ri)) * eps * eps);
        outer1 = std::max(outer1, std::abs(g.first_derivative(ro)) / eps);
        outer2 = std::max(outer2, std::abs(g.second_derivative(ro)) / (eps * eps));
      }
      const double worst = std::max({inner1, inner2, outer1, outer2});
      out.push_back({name + " (max scaled derivative)", c, worst, 0.0, worst <= c});
    });
  }
  SplitMix64 rng(kDefaultSeed ^ 0xFDULL);
  const std::vector<std::pair<std::string, ProfilePtr>> profiles{
      {"cutoff", std::make_shared<CutoffProfile>(0.05)},
      {"power", minimizing_profile(0.05, 5, 0.0, MinimizingBranch::power)},
      {"radial-log", minimizing_profile(0.05, 4, 0.0, MinimizingBranch::radial_log)},
      {"bump", random_bump(rng)},
  };
  for (const auto &[name, f] : profiles) {
    guarded(out, "finite differences " + name, [&] {
      const Interval s = f->support();
      double worst = 0.0;
      for (int i = 1; i < 200; ++i) {
        const double r = s.lo * std::pow(s.hi / s.lo, i / 200.0);
        const double h = 1e-5 * r;
        const double d1 = (f->value(r + h) - f->value(r - h)) / (2 * h);
        const double d2 = (f->first_derivative(r + h) - f->first_derivative(r - h)) / (2 * h);
        const double s1 = std::max(1.0, std::abs(f->first_derivative(r)) * r);
        const double s2 = std::max(1.0, std::abs(f->second_derivative(r)) * r * r);
        worst = std::max(worst, std::abs(d1 - f->first_derivative(r)) * r / s1);
        worst = std::max(worst, std::abs(d2 - f->second_derivative(r)) * r * r / s2);
      }
      out.push_back({"finite differences " + name + " (max scaled diff)", 0.0, worst, 1e-6,
                     worst <= 1e-6});
    });
  }
  guarded(out, "boundary layers", [&] {
    // the layer integrals are scale invariant, so they must not grow as eps shrinks
    double worst = 0.0;
    for (int q = 0; q <= 2; ++q) {
      const double power = 5.0 - 0.0 - 5.0 + 2.0 * q;
      auto layers = [&](double eps) {
        const ProfilePtr f = minimizing_profile(eps, 5, 0.0, MinimizingBranch::power);
        return weighted_integral(*f, q, power, Interval{eps, 2 * eps}).value +
               weighted_integral(*f, q, power, Interval{0.5 / eps, 1 / eps}).value;
      };
      const double a = layers(1e-2), b = layers(1e-4);
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    out.push_back({"boundary-layer integrals bounded in eps (max rel change)", 0.0, worst,
                   1e-6, worst <= 1e-6});
  });
  return out;
}

// ---------------------------------------------------------------------------

bool is_suite(const std::string &name) {
  return name == "full" || name == "constants" || name == "spectra" ||
         name == "quotients" || name == "sweeps";
}

VerificationReport run_suite(const std::string &name, std::uint64_t seed) {
  if (!is_suite(name))
    throw ArgumentError("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  const bool full = name == "full";
  auto &r = report.records;
  if (full || name == "constants") {
    append(r, closed_form_checks());
    append(r, electric_checks());
    append(r, ab_hardy_checks());
    append(r, oracle_grid_checks());
    append(r, monopole_checks());
    append(r, constant_property_checks());
  }
  if (full || name == "spectra") {
    append(r, circle_checks());
    append(r, spectra_property_checks());
  }
  if (full || name == "quotients") {
    append(r, plateau_checks());
    append(r, lemma_checks(seed));
    append(r, inequality_checks(seed));
    append(r, carre_du_champ_checks(seed));
    append(r, quotient_property_checks(seed));
    append(r, radial_property_checks());
  }
  if (full || name == "sweeps")
    append(r, sweep_law_checks());
  for (const auto &rec : r)
    report.pass = report.pass && rec.pass;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace hrc
