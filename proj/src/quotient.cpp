#include "hrc/quotient.hpp"

#include "hrc/errors.hpp"

#include <cmath>

namespace hrc {

namespace {

void require_mode(const ModeFunction &m) {
  if (!m.profile)
    throw ArgumentError("mode has no radial profile");
  if (!(m.eigenvalue >= -1e-12) || !std::isfinite(m.eigenvalue))
    throw ArgumentError("mode eigenvalue must be finite and >= 0");
}

struct Energies {
  double a0, a1, a2, error;
};

// a_q = int |f^{(q)}|^2 r^{base - 2q}
Energies energies(const RadialProfile &f, double base, bool need_second) {
  const auto i0 = weighted_integral(f, 0, base - 4.0);
  const auto i1 = weighted_integral(f, 1, base - 2.0);
  Energies e{i0.value, i1.value, 0.0, i0.error + i1.error};
  if (need_second) {
    const auto i2 = weighted_integral(f, 2, base);
    e.a2 = i2.value;
    e.error += i2.error;
  }
  return e;
}

ModeTerms hardy_rellich_terms(const ModeFunction &m, int d, double alpha) {
  require_mode(m);
  const double l = m.eigenvalue;
  const Energies e = energies(*m.profile, d - alpha - 1.0, true);
  ModeTerms t;
  t.eigenvalue = l;
  t.numerator = e.a2 + ((d - 1.0) * (alpha + 1.0) + 2.0 * l) * e.a1 +
                l * ((alpha + 2.0) * (d - alpha - 4.0) + l) * e.a0;
  t.denominator = e.a1 + l * e.a0;
  t.error = e.error;
  return t;
}

ModeTerms hardy_terms(const ModeFunction &m, int d, double beta) {
  require_mode(m);
  const double l = m.eigenvalue;
  const auto i1 = weighted_integral(*m.profile, 1, d - beta - 1.0);
  const auto i0 = weighted_integral(*m.profile, 0, d - beta - 3.0);
  ModeTerms t;
  t.eigenvalue = l;
  t.numerator = i1.value + l * i0.value;
  t.denominator = i0.value;
  t.error = i0.error + i1.error;
  return t;
}

template <typename Terms>
QuotientReport assemble(std::span<const ModeFunction> modes, Terms terms) {
  if (modes.empty())
    throw DegenerateInputError("quotient needs at least one mode");
  QuotientReport report;
  report.modes.reserve(modes.size());
  for (const auto &m : modes) {
    report.modes.push_back(terms(m));
    const ModeTerms &t = report.modes.back();
    report.numerator += t.numerator;
    report.denominator += t.denominator;
    report.error += t.error;
  }
  if (!(report.denominator > 0.0))
    throw DegenerateInputError("quotient denominator vanishes (zero profile?)");
  report.ratio = report.numerator / report.denominator;
  return report;
}

} // namespace

double mode_numerator(const ModeFunction &m, int d, double alpha) {
  return hardy_rellich_terms(m, d, alpha).numerator;
}

double mode_denominator(const ModeFunction &m, int d, double alpha) {
  return hardy_rellich_terms(m, d, alpha).denominator;
}

QuotientReport hardy_rellich_quotient(std::span<const ModeFunction> modes, int d,
                                      double alpha) {
  return assemble(modes, [&](const ModeFunction &m) {
    return hardy_rellich_terms(m, d, alpha);
  });
}

QuotientReport hardy_quotient(std::span<const ModeFunction> modes, int d,
                              double beta) {
  return assemble(modes,
                  [&](const ModeFunction &m) { return hardy_terms(m, d, beta); });
}

double carre_du_champ_residual(const ModeFunction &mode, const AngularOperator &op,
                               int d, double beta) {
  require_mode(mode);
  double a = 0.0;
  if (const auto *c = std::get_if<ConstantPotential>(&op))
    a = c->a;
  else if (!std::holds_alternative<FreeLaplacian>(op))
    throw ArgumentError("Carre du Champ residual is only available for the free "
                        "and constant-potential operators");
  if (!(a >= 0.0))
    throw ArgumentError("potential a must be >= 0");
  const double lambda = mode.eigenvalue;
  if (lambda < a - 1e-12)
    throw ArgumentError("eigenvalue of -Delta_S + a cannot lie below a");

  const RadialProfile &f = *mode.profile;
  const double p = beta + d - 1.0; // r^beta times the volume factor r^{d-1}

  const double mass = weighted_integral(f, 0, p - 2.0).value;
  const double grad = weighted_integral(f, 1, p).value;

  // Left: int Re(psi L psi) |x|^beta - 1/2 int |psi|^2 L|x|^beta with
  // L_r f = -f'' - (d-1) f'/r and L |x|^beta = (a - beta(d+beta-2)) |x|^{beta-2}.
  const double f_f2 = weighted_product_integral(f, 0, 2, p).value;
  const double f_f1 = weighted_product_integral(f, 0, 1, p - 1.0).value;
  const double lhs = -f_f2 - (d - 1.0) * f_f1 + lambda * mass -
                     0.5 * (a - beta * (d + beta - 2.0)) * mass;

  // Right: int |f'|^2 + lambda int |f|^2/r^2 - (a/2) int |f|^2/r^2.
  const double rhs = grad + lambda * mass - 0.5 * a * mass;
  return std::abs(lhs - rhs);
}

HardyCheck one_d_hardy_check(const RadialProfile &f, double t) {
  HardyCheck c;
  c.lhs = weighted_integral(f, 1, t + 2.0).value;
  const double k = 0.5 * (t + 1.0);
  c.rhs = k * k * weighted_integral(f, 0, t).value;
  c.holds = c.lhs >= c.rhs * (1.0 - 1e-9);
  return c;
}

} // namespace hrc
