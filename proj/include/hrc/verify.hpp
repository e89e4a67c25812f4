#pragma once

// Independent oracles and the check batteries that tie constants, spectra and
// quotients together.

#include "hrc/constants.hpp"
#include "hrc/quotient.hpp"
#include "hrc/radial.hpp"
#include "hrc/spectra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hrc {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// splitmix64. Doubles take the top 53 bits, so streams are identical on
/// every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}
  std::uint64_t next();
  double uniform(); // [0, 1)
  double uniform(double lo, double hi);
  std::size_t below(std::size_t n); // [0, n)

private:
  std::uint64_t state_;
};

/// Cubic B-spline bump with 1 to 4 random coefficients in [-1, 1] and
/// random knots in [0.1, 10] at least 0.1 apart.
ProfilePtr random_bump(SplitMix64 &rng);

/// Naive minimum of the mode function over the first `window` entries, with
/// the degenerate branch handled as min((d-2)^2, smallest nonzero entry).
double brute_force_constant(const AngularSpectrum &spectrum, int d, double alpha,
                            std::size_t window);

/// int |L_r f + lambda f / r^2|^2 r^{d-alpha-1} dr by the trapezoid rule in
/// log r with `points` nodes, split at the profile's breakpoints.
double trapezoid_second_order(const RadialProfile &f, double lambda, int d,
                              double alpha, std::size_t points = 1000000);

struct SweepRow {
  double epsilon = 0.0;
  double ratio = 0.0;
  double constant = 0.0;
  double gap = 0.0;
  double gap_times_log = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  MinimizingBranch branch = MinimizingBranch::power;
  double eigenvalue = 0.0; // eigenvalue of the mode carrying the profile
  double constant = 0.0;   // limit the ratios should approach
  bool monotone = true;    // ratio strictly decreasing as epsilon decreases
  bool law = true;         // gap > 0 and max/min of gap*|ln 4eps^2| < 4
};

const std::vector<double> &default_epsilons();

/// Builds psi_eps for each epsilon (power profile on the minimising mode, or
/// the radial-log profile when the degenerate constant is (d-2)^2) and
/// evaluates the Hardy-Rellich quotient. `forced` overrides the choice;
/// radial-log is only allowed on the degenerate branch.
SweepTable minimizing_sweep(const ProblemSpec &p, const std::vector<double> &epsilons,
                            std::optional<MinimizingBranch> forced = std::nullopt);

struct CheckRecord {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;
  bool pass = true;
  double wall_time = 0.0; // seconds
};

// Batteries. Each returns its records in a fixed order.
std::vector<CheckRecord> closed_form_checks();
std::vector<CheckRecord> electric_checks();
std::vector<CheckRecord> ab_hardy_checks();
std::vector<CheckRecord> oracle_grid_checks();
std::vector<CheckRecord> sweep_checks();
std::vector<CheckRecord> plateau_checks();
std::vector<CheckRecord> lemma_checks(std::uint64_t seed);
std::vector<CheckRecord> inequality_checks(std::uint64_t seed);
std::vector<CheckRecord> circle_checks();
std::vector<CheckRecord> monopole_checks();
std::vector<CheckRecord> carre_du_champ_checks(std::uint64_t seed);

std::vector<CheckRecord> spectra_property_checks();
std::vector<CheckRecord> constant_property_checks();
std::vector<CheckRecord> quotient_property_checks(std::uint64_t seed);
std::vector<CheckRecord> radial_property_checks();
/// Monotone decrease and the log law for a set of sweeps (no final-gap bound).
std::vector<CheckRecord> sweep_law_checks();

bool is_suite(const std::string &name);

/// name in {full, constants, spectra, quotients, sweeps}; throws
/// ArgumentError otherwise.
VerificationReport run_suite(const std::string &name,
                             std::uint64_t seed = kDefaultSeed);

} // namespace hrc
