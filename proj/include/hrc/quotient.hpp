#pragma once

// Rayleigh quotients of mode-decomposed test functions
// psi = sum_m f_m(r) u_m(omega), reduced to radial integrals. Surface-measure
// factors |S^{d-1}| are omitted throughout; they cancel in every ratio.

#include "hrc/radial.hpp"
#include "hrc/spectra.hpp"

#include <span>
#include <vector>

namespace hrc {

/// One term f_m(r) u_m(omega) of the decomposition; only the eigenvalue of
/// u_m is needed.
struct ModeFunction {
  double eigenvalue = 0.0;
  ProfilePtr profile;
};

struct ModeTerms {
  double eigenvalue = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double error = 0.0; // quadrature error bound on numerator + denominator
};

struct QuotientReport {
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  std::vector<ModeTerms> modes;
  double error = 0.0;
};

/// int |f''|^2 r^{d-a-1} + [(d-1)(a+1) + 2l] int |f'|^2 r^{d-a-3}
///   + l [(a+2)(d-a-4) + l] int |f|^2 r^{d-a-5}
double mode_numerator(const ModeFunction &m, int d, double alpha);

/// int |f'|^2 r^{d-a-3} + l int |f|^2 r^{d-a-5}
double mode_denominator(const ModeFunction &m, int d, double alpha);

/// Weighted L psi energy over the weighted first-order energy D psi.
/// Throws DegenerateInputError for an empty mode list or zero denominator.
QuotientReport hardy_rellich_quotient(std::span<const ModeFunction> modes, int d,
                                      double alpha);

/// int D psi |x|^-beta over int |psi|^2 |x|^-(beta+2).
QuotientReport hardy_quotient(std::span<const ModeFunction> modes, int d,
                              double beta);

/// |LHS - RHS| of the Carre du Champ identity
///   int Gamma(psi)|x|^beta = int |d_r psi|^2 |x|^beta
///     + int |Lambda^{1/2} psi|^2 |x|^{beta-2} - 1/2 int |psi|^2 |x|^-2 Lambda |x|^beta
/// for Lambda = -Delta_S + a (free or electric-const operators only).
/// The left side is evaluated from Re(psi L psi) - 1/2 |psi|^2 L|x|^beta
/// without integrating by parts, the right side from first derivatives only.
double carre_du_champ_residual(const ModeFunction &mode, const AngularOperator &op,
                               int d, double beta);

struct HardyCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

/// int |f'|^2 r^{t+2} >= ((t+1)/2)^2 int |f|^2 r^t.
HardyCheck one_d_hardy_check(const RadialProfile &f, double t);

} // namespace hrc
