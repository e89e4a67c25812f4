#pragma once

// Eigenvalue enumerations for the angular operators that appear in the
// perturbed Laplacians L = L_r + r^-2 Lambda_omega.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hrc {

enum class SpectrumFamily {
  free_laplacian,  // -Delta on S^{d-1}
  electric_const,  // -Delta_S + a
  electric_profile, // -d^2/dtheta^2 + a(theta) on the circle
  aharonov_bohm,
  monopole,
  custom
};

std::string to_string(SpectrumFamily family);

/// Non-decreasing list of angular eigenvalues. Immutable once built.
class AngularSpectrum {
public:
  AngularSpectrum() = default;
  /// Throws ArgumentError if `eigenvalues` is decreasing somewhere or holds a
  /// value below -1e-12.
  AngularSpectrum(std::vector<double> eigenvalues, SpectrumFamily family,
                  bool exhaustive);

  std::span<const double> eigenvalues() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  SpectrumFamily family() const noexcept { return family_; }
  /// True if the source can enumerate arbitrarily many eigenvalues in
  /// non-decreasing order (closed forms). Numerical spectra are bounded by
  /// their discretisation.
  bool exhaustive() const noexcept { return exhaustive_; }

private:
  std::vector<double> values_;
  SpectrumFamily family_ = SpectrumFamily::custom;
  bool exhaustive_ = false;
};

/// Enumeration indices removed before minimisation.
struct ModeExclusion {
  std::set<std::size_t> indices;

  bool empty() const noexcept { return indices.empty(); }
  bool contains(std::size_t i) const { return indices.count(i) != 0; }
};

// Closed-form providers ---------------------------------------------------

/// Distinct eigenvalues k(k+d-2), k = 0..count-1, of the Laplace-Beltrami
/// operator on S^{d-1}.
AngularSpectrum laplace_beltrami_spectrum(int d, std::size_t count);

/// Pointwise shift by a >= 0 (the electric potential a/|x|^2).
AngularSpectrum shifted_spectrum(const AngularSpectrum &base, double a);

/// Aharonov-Bohm spectrum (m+flux)(m+flux+d-2) over
/// Z' = {m <= 2-d-flux or m >= -flux}. One entry per m, so values may repeat.
AngularSpectrum ab_spectrum(int d, double flux, std::size_t count);

/// Monopole of strength g (2|g| a positive integer):
/// k(k+2)/4 - g^2 with k = 2(|g|+l), l = 0, 1, ...
AngularSpectrum monopole_spectrum(double g, std::size_t count);

/// Smallest `count` eigenvalues of -d^2/dtheta^2 + a(theta) on the circle.
/// `samples` holds a(2 pi j / N), j = 0..N-1, with N = samples.size().
/// Requires N even and N >= 4 count.
AngularSpectrum circle_schrodinger_spectrum(std::span<const double> samples,
                                            std::size_t count);

AngularSpectrum apply_exclusion(const AngularSpectrum &spectrum,
                                const ModeExclusion &exclusion);

// Operator descriptions ---------------------------------------------------

struct FreeLaplacian {};
struct ConstantPotential {
  double a = 0.0;
};
struct CirclePotential {
  std::vector<double> samples; // a(theta_j) on a uniform periodic grid
};
struct AharonovBohm {
  double flux = 0.0;
};
struct Monopole {
  double g = 0.5;
};

using AngularOperator = std::variant<FreeLaplacian, ConstantPotential,
                                     CirclePotential, AharonovBohm, Monopole>;

SpectrumFamily family_of(const AngularOperator &op);

/// Checks that `op` makes sense in dimension d (monopole needs d = 3, the
/// circle profile d = 2, a >= 0, ...). Throws ArgumentError otherwise.
void validate_operator(const AngularOperator &op, int d);

/// Largest count the operator can deliver, or nullopt when unbounded.
std::optional<std::size_t> max_enumeration(const AngularOperator &op);

/// First `count` eigenvalues of `op` in dimension d, in enumeration order.
AngularSpectrum enumerate_spectrum(const AngularOperator &op, int d,
                                   std::size_t count);

} // namespace hrc
