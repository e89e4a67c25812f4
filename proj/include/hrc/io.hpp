#pragma once

// JSON encodings of results and the problem / modes file formats.

#include "hrc/constants.hpp"
#include "hrc/quotient.hpp"
#include "hrc/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hrc {

using Json = nlohmann::ordered_json;

enum class WeightRole { hardy_rellich, hardy, rellich_product };

std::string to_string(WeightRole role);
WeightRole parse_weight_role(const std::string &s);

struct ProblemFile {
  ProblemSpec spec;
  WeightRole role = WeightRole::hardy_rellich;
};

/// {"type": free | electric-const | electric-profile | ab | monopole, "a",
///  "flux", "g", "samples", "grid"}. For electric-profile either "samples"
/// (a(theta_j) on a uniform grid; "grid", if present, must equal its length)
/// or a constant "a" together with "grid".
AngularOperator parse_angular(const Json &j);
Json angular_to_json(const AngularOperator &op);

/// {"d", "alpha", "angular", "exclude"?, "weight_role"?}. Throws
/// ArgumentError on any schema or precondition violation.
ProblemFile parse_problem(const Json &j);

/// Modes file: {"modes": [{"index": i | "eigenvalue": l, "profile": {...},
/// "scale": k?}, ...]} or the bare array. Profiles:
///   {"type": "bump", "knots": [...], "coeffs": [...]}
///   {"type": "cutoff", "epsilon": e}
///   {"type": "minimizing", "epsilon": e, "branch": "power" | "radial-log"}
/// "index" refers to the problem's enumeration order.
std::vector<ModeFunction> parse_modes(const Json &j, const ProblemFile &problem);

Json to_json(const ConstantResult &r);
Json to_json(const QuotientReport &r);
Json to_json(const SweepTable &t);
Json to_json(const CheckRecord &r);
/// wall_time is only written when asked, so reports are reproducible.
Json to_json(const VerificationReport &r, bool with_wall_time = false);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

MinimizingBranch parse_branch(const std::string &s);
std::string to_string(MinimizingBranch b);

} // namespace hrc
