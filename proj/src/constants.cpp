#include "hrc/constants.hpp"

#include "hrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace hrc {

namespace {

constexpr std::size_t kInitialCount = 16;

// Walks the spectrum of an operator in enumeration order, skipping excluded
// indices, and re-enumerates with a larger count when it runs off the end.
class ModeWalker {
public:
  ModeWalker(const ProblemSpec &p) : p_(p) {
    validate_operator(p.angular, p.d);
    std::size_t count = kInitialCount;
    if (!p.exclusion.empty())
      count = std::max(count, *p.exclusion.indices.rbegin() + 1);
    limit_ = max_enumeration(p.angular);
    if (limit_) {
      if (!p.exclusion.empty() && *p.exclusion.indices.rbegin() >= *limit_)
        throw ArgumentError("excluded mode index exceeds the resolvable spectrum");
      count = *limit_;
    }
    spectrum_ = enumerate_spectrum(p.angular, p.d, count);
  }

  // Next non-excluded (index, eigenvalue), or nullopt once a bounded source
  // is exhausted.
  std::optional<std::pair<std::size_t, double>> next() {
    for (;;) {
      if (pos_ >= spectrum_.size() && !grow())
        return std::nullopt;
      const std::size_t i = pos_++;
      if (!p_.exclusion.contains(i))
        return std::make_pair(i, spectrum_[i]);
    }
  }

private:
  bool grow() {
    if (limit_)
      return false;
    spectrum_ = enumerate_spectrum(p_.angular, p_.d, 2 * spectrum_.size());
    return true;
  }

  const ProblemSpec &p_;
  AngularSpectrum spectrum_;
  std::optional<std::size_t> limit_;
  std::size_t pos_ = 0;
};

double generic_phi(double lambda, int d, double alpha) {
  const double t = d - alpha - 4.0;
  const double num = 4.0 * lambda + (d + alpha) * t;
  return num * num / (4.0 * (4.0 * lambda + t * t));
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

} // namespace

std::string to_string(Branch branch) {
  return branch == Branch::generic ? "generic" : "degenerate";
}

bool is_degenerate(int d, double alpha) {
  return std::abs(d - alpha - 4.0) <= kDegenerateThreshold;
}

double mode_value(double lambda, int d, double alpha) {
  if (!(lambda >= -kZeroEigenvalue) || !std::isfinite(lambda))
    throw ArgumentError("mode_value needs a finite eigenvalue >= 0");
  if (is_degenerate(d, alpha)) {
    if (lambda <= kZeroEigenvalue)
      throw DomainError("mode_value: the zero mode on the degenerate branch "
                        "contributes (d-2)^2, use hardy_rellich_constant");
    return lambda;
  }
  return generic_phi(std::max(lambda, 0.0), d, alpha);
}

double mode_value_argmin(int d, double alpha) {
  // With u = 4 lambda, phi = (u+c)^2 / (4(u+b)) = (v + c-b)^2 / (4v), v = u+b,
  // which is convex in v > 0 and minimal at v = |c-b|.
  const double t = d - alpha - 4.0;
  const double b = t * t;
  const double c = (d + alpha) * t;
  const double u = -b + std::abs(c - b);
  return std::max(0.0, u / 4.0);
}

namespace {

class ListWalker {
public:
  explicit ListWalker(const AngularSpectrum &s) : s_(s) {}
  std::optional<std::pair<std::size_t, double>> next() {
    if (pos_ >= s_.size())
      return std::nullopt;
    const std::size_t i = pos_++;
    return std::make_pair(i, s_[i]);
  }

private:
  const AngularSpectrum &s_;
  std::size_t pos_ = 0;
};

template <typename Walker>
ConstantResult minimise(Walker &walker, int d, double alpha, bool unbounded) {
  ConstantResult result;

  if (is_degenerate(d, alpha)) {
    result.branch = Branch::degenerate;
    std::optional<std::size_t> zero_index;
    std::optional<std::pair<std::size_t, double>> nonzero;
    while (auto mode = walker.next()) {
      ++result.modes_examined;
      if (mode->second <= kZeroEigenvalue) {
        if (!zero_index)
          zero_index = mode->first;
        continue;
      }
      nonzero = mode;
      break;
    }
    if (result.modes_examined == 0)
      throw ArgumentError("spectrum is empty after exclusion");
    const double radial = static_cast<double>((d - 2) * (d - 2));
    if (nonzero && nonzero->second <= radial) {
      result.value = nonzero->second;
      result.argmin_eigenvalue = nonzero->second;
      result.argmin_index = nonzero->first;
    } else {
      result.value = radial;
      result.argmin_eigenvalue = 0.0;
      result.argmin_index = zero_index;
    }
    return result;
  }

  const double lambda_star = mode_value_argmin(d, alpha);
  double best = std::numeric_limits<double>::infinity();
  bool stopped = false;
  while (auto mode = walker.next()) {
    ++result.modes_examined;
    const double v = mode_value(mode->second, d, alpha);
    if (v < best) {
      best = v;
      result.argmin_eigenvalue = mode->second;
      result.argmin_index = mode->first;
    }
    // phi is non-decreasing beyond its minimiser, so nothing later can win.
    if (mode->second >= lambda_star) {
      stopped = true;
      break;
    }
  }
  if (result.modes_examined == 0)
    throw ArgumentError("spectrum is empty after exclusion");
  if (unbounded && !stopped)
    throw ResolutionError("spectrum resolution ends before the minimiser of "
                          "the mode function; refine the angular grid");
  result.value = best;
  return result;
}

template <typename Walker>
ConstantResult hardy_from(Walker &walker, int d, double beta) {
  const auto first = walker.next();
  if (!first)
    throw ArgumentError("spectrum is empty after exclusion");
  const double shift = 0.5 * (d - beta - 2.0);
  ConstantResult result;
  result.value = first->second + shift * shift;
  result.argmin_eigenvalue = first->second;
  result.argmin_index = first->first;
  result.branch = Branch::generic;
  result.modes_examined = 1;
  return result;
}

} // namespace

ConstantResult hardy_rellich_constant(const ProblemSpec &p) {
  ModeWalker walker(p);
  return minimise(walker, p.d, p.alpha, true);
}

ConstantResult hardy_rellich_constant(const AngularSpectrum &spectrum, int d,
                                      double alpha) {
  if (d < 2)
    throw ArgumentError("dimension must be >= 2");
  ListWalker walker(spectrum);
  return minimise(walker, d, alpha, false);
}

ConstantResult hardy_constant(const ProblemSpec &p) {
  ModeWalker walker(p);
  return hardy_from(walker, p.d, p.alpha);
}

ConstantResult hardy_constant(const AngularSpectrum &spectrum, int d, double beta) {
  if (d < 2)
    throw ArgumentError("dimension must be >= 2");
  ListWalker walker(spectrum);
  return hardy_from(walker, d, beta);
}

double rellich_product_constant(const ProblemSpec &p) {
  ProblemSpec shifted = p;
  shifted.alpha = p.alpha + 2.0;
  return hardy_rellich_constant(p).value * hardy_constant(shifted).value;
}

double classical_hardy_rellich_table(int d) {
  if (d <= 0)
    throw ArgumentError("dimension must be positive");
  switch (d) {
  case 1:
    return 0.25;
  case 2:
    return 0.0;
  case 3:
    return 25.0 / 36.0;
  case 4:
    return 3.0;
  default:
    return static_cast<double>(d) * d / 4.0;
  }
}

double one_d_hardy_rellich_constant(double alpha) {
  return (alpha + 1.0) * (alpha + 1.0) / 4.0;
}

double rellich_p0(int d) {
  if (d < 2)
    throw ArgumentError("dimension must be >= 2");
  const double linear = d * (d - 4) / 2.0;
  const double vertex = -linear / 2.0;
  double best = std::numeric_limits<double>::infinity();
  for (long k = 0;; ++k) {
    const double c = static_cast<double>(k) * (k + d - 2);
    const double v = c * (linear + c);
    if (c >= vertex && v > best)
      break;
    best = std::min(best, v);
  }
  return best;
}

double evans_lewis_constant(int d, double flux) {
  if (d != 2 && d != 4)
    throw ArgumentError("the Evans-Lewis constant is defined for d = 2 and d = 4");
  if (!std::isfinite(flux))
    throw ArgumentError("flux must be finite");
  // ((x^2-1)^2 grows with |x| once |x| >= 1; |x| <= 3 covers the minimiser.
  const long lo = static_cast<long>(std::floor(-flux)) - 4;
  const long hi = static_cast<long>(std::ceil(-flux)) + 4;
  double best = std::numeric_limits<double>::infinity();
  for (long m = lo; m <= hi; ++m) {
    const double x = static_cast<double>(m) + flux;
    if (d == 4 && x * x < 1.0)
      continue;
    const double v = (x * x - 1.0) * (x * x - 1.0);
    best = std::min(best, v);
  }
  return best;
}

NamedConstantResult named_constant(const ProblemSpec &p) {
  NamedConstantResult out;
  out.general = hardy_rellich_constant(p);
  const bool degenerate = is_degenerate(p.d, p.alpha);

  if (const auto *c = std::get_if<ConstantPotential>(&p.angular)) {
    if (p.d == 2 && p.alpha == 0.0 && p.exclusion.empty()) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 400; ++k) {
        const double s = static_cast<double>(k) * k + c->a;
        best = std::min(best, (s - 1.0) * (s - 1.0) / (s + 1.0));
      }
      out.specialised = best;
      out.enforced = true;
      out.note = "C_a = min_k (k^2+a-1)^2/(k^2+a+1)";
    } else {
      out.note = "no specialised display for this (d, alpha); general formula only";
    }
  } else if (const auto *ab = std::get_if<AharonovBohm>(&p.angular)) {
    if (!p.exclusion.empty()) {
      out.note = "exclusion applied; specialised display not compared";
    } else {
      const double flux = ab->flux;
      const int d = p.d;
      const double a = p.alpha;
      const long lo = static_cast<long>(std::floor(-flux)) - 400;
      const long hi = static_cast<long>(std::ceil(-flux)) + 400;
      double best = std::numeric_limits<double>::infinity();
      for (long m = lo; m <= hi; ++m) {
        const double x = static_cast<double>(m) + flux;
        if (!(m <= 2 - d - flux || m >= -flux))
          continue;
        const double q = x * (x + d - 2);
        if (!degenerate) {
          const double num = 4.0 * q + (d - 4.0 - a) * (d + a);
          best = std::min(best, num * num /
                                    (4.0 * (4.0 * q + (d - 4.0 - a) * (d - 4.0 - a))));
        } else if (std::abs(x) > kZeroEigenvalue &&
                   std::abs(x - (2.0 - d)) > kZeroEigenvalue) {
          // The printed degenerate display squares the eigenvalue.
          best = std::min(best, q * q);
        }
      }
      if (degenerate) {
        best = std::min(best, static_cast<double>((d - 2) * (d - 2)));
        out.specialised = best;
        out.enforced = false;
        out.note = "degenerate AB display uses lambda_m^2 where the general "
                   "formula uses lambda_m; general formula reported";
      } else {
        out.specialised = best;
        out.enforced = true;
        out.note = "C_AB(d, alpha) over Z'";
      }
    }
  } else if (const auto *mono = std::get_if<Monopole>(&p.angular)) {
    const double g = mono->g;
    const double a = p.alpha;
    double best = std::numeric_limits<double>::infinity();
    for (int l = 0; l <= 400; ++l) {
      const double k = 2.0 * (std::abs(g) + l);
      const double q = k * (k + 2.0) - 4.0 * g * g;
      const double num = q - (a + 1.0) * (a + 3.0);
      best = std::min(best, num * num / (4.0 * (q + (a + 1.0))));
    }
    out.specialised = best;
    out.enforced = false;
    out.note = "printed monopole display has denominator 4(k(k+2)-4g^2+(alpha+1)); "
               "the general formula gives (alpha+1)^2 and is reported";
  } else {
    throw ArgumentError("named_constant covers electric-const, ab and monopole");
  }

  if (out.enforced && out.specialised && !close(out.general.value, *out.specialised))
    throw ConsistencyError("general and specialised constants disagree: " +
                           std::to_string(out.general.value) + " vs " +
                           std::to_string(*out.specialised));
  return out;
}

} // namespace hrc
