#include "hrc/spectra.hpp"

#include "hrc/errors.hpp"
#include "hrc/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hrc {

namespace {

constexpr double kNegativeTolerance = 1e-12;

void require_count(std::size_t count) {
  if (count == 0)
    throw ArgumentError("eigenvalue count must be positive");
}

void require_dimension(int d) {
  if (d < 2)
    throw ArgumentError("dimension must be >= 2, got " + std::to_string(d));
}

bool is_half_integer_strength(double g) {
  const double twice = 2.0 * std::abs(g);
  return std::abs(twice - std::round(twice)) <= 1e-12 && twice >= 1.0 - 1e-12;
}

} // namespace

std::string to_string(SpectrumFamily family) {
  switch (family) {
  case SpectrumFamily::free_laplacian:
    return "free";
  case SpectrumFamily::electric_const:
    return "electric-const";
  case SpectrumFamily::electric_profile:
    return "electric-profile";
  case SpectrumFamily::aharonov_bohm:
    return "ab";
  case SpectrumFamily::monopole:
    return "monopole";
  case SpectrumFamily::custom:
    return "custom";
  }
  return "custom";
}

AngularSpectrum::AngularSpectrum(std::vector<double> eigenvalues,
                                 SpectrumFamily family, bool exhaustive)
    : values_(std::move(eigenvalues)), family_(family), exhaustive_(exhaustive) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < -kNegativeTolerance)
      throw ArgumentError("angular eigenvalue " + std::to_string(i) +
                          " is negative or not finite");
    if (i > 0 && values_[i] < values_[i - 1])
      throw ArgumentError("angular eigenvalues must be non-decreasing");
  }
}

AngularSpectrum laplace_beltrami_spectrum(int d, std::size_t count) {
  require_dimension(d);
  require_count(count);
  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double kk = static_cast<double>(k);
    values[k] = kk * (kk + d - 2);
  }
  return {std::move(values), SpectrumFamily::free_laplacian, true};
}

AngularSpectrum shifted_spectrum(const AngularSpectrum &base, double a) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw ArgumentError("potential shift a must be a finite value >= 0");
  std::vector<double> values(base.eigenvalues().begin(),
                             base.eigenvalues().end());
  for (double &v : values)
    v += a;
  const SpectrumFamily family = base.family() == SpectrumFamily::free_laplacian
                                    ? SpectrumFamily::electric_const
                                    : base.family();
  return {std::move(values), family, base.exhaustive()};
}

AngularSpectrum ab_spectrum(int d, double flux, std::size_t count) {
  require_dimension(d);
  require_count(count);
  if (!std::isfinite(flux))
    throw ArgumentError("flux must be finite");

  auto lambda = [&](long long m) {
    const double x = static_cast<double>(m) + flux;
    return std::max(0.0, x * (x + d - 2));
  };

  // Two monotone branches of Z'. For d = 2 and integer flux both boundary
  // points coincide; the lower branch then starts one step further down.
  long long up = static_cast<long long>(std::ceil(-flux));
  long long down = static_cast<long long>(std::floor(2.0 - d - flux));
  down = std::min(down, up - 1);

  std::vector<double> values;
  values.reserve(count);
  while (values.size() < count) {
    const double lu = lambda(up);
    const double ld = lambda(down);
    if (lu <= ld) {
      values.push_back(lu);
      ++up;
    } else {
      values.push_back(ld);
      --down;
    }
  }
  return {std::move(values), SpectrumFamily::aharonov_bohm, true};
}

AngularSpectrum monopole_spectrum(double g, std::size_t count) {
  require_count(count);
  if (!is_half_integer_strength(g))
    throw ArgumentError("monopole strength needs |g| >= 1/2 with 2|g| an integer");
  const double ag = std::abs(g);
  std::vector<double> values(count);
  for (std::size_t l = 0; l < count; ++l) {
    const double k = 2.0 * (ag + static_cast<double>(l));
    values[l] = 0.25 * k * (k + 2.0) - g * g;
  }
  return {std::move(values), SpectrumFamily::monopole, true};
}

AngularSpectrum circle_schrodinger_spectrum(std::span<const double> samples,
                                            std::size_t count) {
  require_count(count);
  const std::size_t n = samples.size();
  if (n < 4 || n % 2 != 0)
    throw ResolutionError("circle grid size must be even and >= 4");
  if (n < 4 * count)
    throw ResolutionError("circle grid of size " + std::to_string(n) +
                          " cannot resolve " + std::to_string(count) +
                          " eigenvalues (need N >= 4 count)");
  for (double a : samples)
    if (!(a >= 0.0) || !std::isfinite(a))
      throw ArgumentError("potential samples must be finite and non-negative");

  // Galerkin matrix in the orthonormal real Fourier basis
  // {1/sqrt(2pi), cos(k t)/sqrt(pi), sin(k t)/sqrt(pi)}, k <= N/4. The
  // trapezoid rule on N points integrates every product exactly, so a
  // constant potential gives k^2 + a to rounding.
  const std::size_t kmax = n / 4;
  const std::size_t dim = 2 * kmax + 1;
  const double pi = std::numbers::pi;
  const double h = 2.0 * pi / static_cast<double>(n);

  std::vector<double> basis(dim * n);
  std::vector<double> wavenumber(dim, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = h * static_cast<double>(j);
    basis[j] = 1.0 / std::sqrt(2.0 * pi);
    for (std::size_t k = 1; k <= kmax; ++k) {
      basis[(2 * k - 1) * n + j] = std::cos(static_cast<double>(k) * t) / std::sqrt(pi);
      basis[(2 * k) * n + j] = std::sin(static_cast<double>(k) * t) / std::sqrt(pi);
    }
  }
  for (std::size_t k = 1; k <= kmax; ++k)
    wavenumber[2 * k - 1] = wavenumber[2 * k] = static_cast<double>(k);

  SymmetricMatrix m(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = p; q < dim; ++q) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        s += samples[j] * basis[p * n + j] * basis[q * n + j];
      s *= h;
      if (p == q)
        s += wavenumber[p] * wavenumber[p];
      m(p, q) = m(q, p) = s;
    }
  }

  const JacobiResult eig = jacobi_eigenvalues(std::move(m));
  if (!eig.converged)
    throw ResolutionError("Jacobi iteration did not converge");

  std::vector<double> values(eig.eigenvalues.begin(),
                             eig.eigenvalues.begin() + static_cast<long>(count));
  for (double &v : values)
    if (v < 0.0 && v > -kNegativeTolerance)
      v = 0.0;
  return {std::move(values), SpectrumFamily::electric_profile, false};
}

AngularSpectrum apply_exclusion(const AngularSpectrum &spectrum,
                                const ModeExclusion &exclusion) {
  if (exclusion.empty())
    return spectrum;
  for (std::size_t i : exclusion.indices)
    if (i >= spectrum.size())
      throw ArgumentError("excluded mode index " + std::to_string(i) +
                          " is out of range for a spectrum of size " +
                          std::to_string(spectrum.size()));
  std::vector<double> kept;
  kept.reserve(spectrum.size() - exclusion.indices.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    if (!exclusion.contains(i))
      kept.push_back(spectrum[i]);
  return {std::move(kept), spectrum.family(), spectrum.exhaustive()};
}

SpectrumFamily family_of(const AngularOperator &op) {
  struct Visitor {
    SpectrumFamily operator()(const FreeLaplacian &) const {
      return SpectrumFamily::free_laplacian;
    }
    SpectrumFamily operator()(const ConstantPotential &) const {
      return SpectrumFamily::electric_const;
    }
    SpectrumFamily operator()(const CirclePotential &) const {
      return SpectrumFamily::electric_profile;
    }
    SpectrumFamily operator()(const AharonovBohm &) const {
      return SpectrumFamily::aharonov_bohm;
    }
    SpectrumFamily operator()(const Monopole &) const {
      return SpectrumFamily::monopole;
    }
  };
  return std::visit(Visitor{}, op);
}

void validate_operator(const AngularOperator &op, int d) {
  require_dimension(d);
  if (const auto *c = std::get_if<ConstantPotential>(&op)) {
    if (!(c->a >= 0.0) || !std::isfinite(c->a))
      throw ArgumentError("electric potential a must be finite and >= 0");
  } else if (const auto *p = std::get_if<CirclePotential>(&op)) {
    if (d != 2)
      throw ArgumentError("an angular potential profile is only supported for d = 2");
    const std::size_t n = p->samples.size();
    if (n < 4 || n % 2 != 0)
      throw ArgumentError("potential profile needs an even number (>= 4) of samples");
    for (double a : p->samples)
      if (!(a >= 0.0) || !std::isfinite(a))
        throw ArgumentError("potential samples must be finite and non-negative");
  } else if (const auto *ab = std::get_if<AharonovBohm>(&op)) {
    if (!std::isfinite(ab->flux))
      throw ArgumentError("flux must be finite");
  } else if (const auto *mono = std::get_if<Monopole>(&op)) {
    if (d != 3)
      throw ArgumentError("the monopole operator lives in d = 3");
    if (!is_half_integer_strength(mono->g))
      throw ArgumentError("monopole strength needs |g| >= 1/2 with 2|g| an integer");
  }
}

std::optional<std::size_t> max_enumeration(const AngularOperator &op) {
  if (const auto *p = std::get_if<CirclePotential>(&op))
    return p->samples.size() / 4;
  return std::nullopt;
}

AngularSpectrum enumerate_spectrum(const AngularOperator &op, int d,
                                   std::size_t count) {
  validate_operator(op, d);
  struct Visitor {
    int d;
    std::size_t count;
    AngularSpectrum operator()(const FreeLaplacian &) const {
      return laplace_beltrami_spectrum(d, count);
    }
    AngularSpectrum operator()(const ConstantPotential &c) const {
      return shifted_spectrum(laplace_beltrami_spectrum(d, count), c.a);
    }
    AngularSpectrum operator()(const CirclePotential &p) const {
      return circle_schrodinger_spectrum(p.samples, count);
    }
    AngularSpectrum operator()(const AharonovBohm &ab) const {
      return ab_spectrum(d, ab.flux, count);
    }
    AngularSpectrum operator()(const Monopole &m) const {
      return monopole_spectrum(m.g, count);
    }
  };
  return std::visit(Visitor{d, count}, op);
}

} // namespace hrc
