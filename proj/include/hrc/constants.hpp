#pragma once

// Sharp constants of the weighted Hardy-Rellich, Hardy and Rellich
// inequalities for L = L_r + r^-2 Lambda_omega.

#include "hrc/spectra.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace hrc {

/// |d - alpha - 4| at or below this value selects the degenerate branch.
inline constexpr double kDegenerateThreshold = 1e-12;
/// Eigenvalues at or below this value count as zero.
inline constexpr double kZeroEigenvalue = 1e-12;

enum class Branch { generic, degenerate };

std::string to_string(Branch branch);

/// A weighted inequality instance. For the Hardy constant `alpha` plays the
/// role of the weight power beta.
struct ProblemSpec {
  int d = 3;
  double alpha = 0.0;
  AngularOperator angular = FreeLaplacian{};
  ModeExclusion exclusion;
};

struct ConstantResult {
  double value = 0.0;
  double argmin_eigenvalue = 0.0;
  /// Enumeration index (before exclusion) of the minimising mode; empty when
  /// the degenerate branch is realised by (d-2)^2 and the spectrum has no
  /// zero mode to attach it to.
  std::optional<std::size_t> argmin_index;
  Branch branch = Branch::generic;
  std::size_t modes_examined = 0;
};

bool is_degenerate(int d, double alpha);

/// The per-mode function
///   phi(lambda) = (4 lambda + (d+alpha)(d-alpha-4))^2 / (4 (4 lambda + (d-alpha-4)^2)).
/// On the degenerate branch d - alpha - 4 = 0 it returns lambda for
/// lambda > 0 and throws DomainError for lambda = 0.
double mode_value(double lambda, int d, double alpha);

/// Minimiser in lambda of phi over [0, inf) (phi is convex in lambda).
double mode_value_argmin(int d, double alpha);

/// C(d, alpha): minimum of mode_value over the (filtered) spectrum.
ConstantResult hardy_rellich_constant(const ProblemSpec &p);

/// C(d, alpha) over an explicit finite eigenvalue list (every entry is
/// examined; indices refer to positions in `spectrum`).
ConstantResult hardy_rellich_constant(const AngularSpectrum &spectrum, int d,
                                      double alpha);

/// C_D(d, beta) = min_m lambda_m + ((d-beta-2)/2)^2, beta = p.alpha.
ConstantResult hardy_constant(const ProblemSpec &p);
ConstantResult hardy_constant(const AngularSpectrum &spectrum, int d, double beta);

/// C(d, alpha) * C_D(d, alpha+2).
double rellich_product_constant(const ProblemSpec &p);

/// Classical unweighted Hardy-Rellich constant of -Delta in R^d
/// (1/4, 0, 25/36, 3, d^2/4).
double classical_hardy_rellich_table(int d);

/// (alpha+1)^2/4, the d = 1 weighted constant.
double one_d_hardy_rellich_constant(double alpha);

/// min_k c_k (d(d-4)/2 + c_k) with c_k = k(k+d-2).
double rellich_p0(int d);

/// Rellich constant for the Aharonov-Bohm Laplacian in d = 2 or 4:
/// min ((m+flux)^2 - 1)^2 over Z (d = 2) or over (m+flux)^2 >= 1 (d = 4).
double evans_lewis_constant(int d, double flux);

struct NamedConstantResult {
  ConstantResult general;
  /// Value of the specialised closed-form display for the family, when one
  /// exists for the requested (d, alpha).
  std::optional<double> specialised;
  /// True when `specialised` is compared and enforced.
  bool enforced = false;
  std::string note;
};

/// Computes the constant of a named family (electric-const, ab, monopole)
/// through the general formula and cross-evaluates the family's own closed
/// form. Throws ConsistencyError when an enforced comparison differs by more
/// than 1e-12 (relative to max(1, |value|)).
NamedConstantResult named_constant(const ProblemSpec &p);

} // namespace hrc
