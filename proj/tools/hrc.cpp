// hrc: sharp Hardy-Rellich constants, quotients, minimizing sweeps and
// verification suites from the command line.

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/io.hpp"
#include "hrc/quotient.hpp"
#include "hrc/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using hrc::Json;

enum Exit {
  ok = 0,
  verify_failed = 1,
  usage = 2,
  consistency = 3,
  sweep_law = 4,
  violation = 5,
};

// Error raised inside a command, carrying its exit code.
struct Failure {
  int code;
  std::string message;
};

struct Globals {
  bool json = false;
  std::string seed = "0x5EED";
  double tol = 1e-6;
};

struct ProblemFlags {
  std::string file;
  std::optional<int> d;
  std::optional<double> alpha;
  std::optional<std::string> angular;
  std::optional<double> a, flux, g;
  std::optional<int> grid;
  std::vector<double> samples;
  std::vector<long long> exclude;
  std::optional<std::string> role;

  void attach(CLI::App *cmd) {
    cmd->add_option("--problem", file, "problem JSON file");
    cmd->add_option("--d", d, "dimension");
    cmd->add_option("--alpha", alpha, "weight exponent (beta for the Hardy role)");
    cmd->add_option("--angular", angular,
                    "free | electric-const | electric-profile | ab | monopole");
    cmd->add_option("--a", a, "constant angular potential");
    cmd->add_option("--flux", flux, "Aharonov-Bohm flux");
    cmd->add_option("--g", g, "monopole strength");
    cmd->add_option("--grid", grid, "circle grid size (electric-profile)");
    cmd->add_option("--samples", samples, "a(theta_j) on a uniform grid")->delimiter(',');
    cmd->add_option("--exclude", exclude, "excluded mode indices")->delimiter(',');
    cmd->add_option("--role", role, "hardy-rellich | hardy | rellich-product");
  }

  Json to_json() const {
    Json j = Json::object();
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in)
        throw Failure{usage, "cannot open problem file '" + file + "'"};
      try {
        j = Json::parse(in);
      } catch (const Json::exception &e) {
        throw Failure{usage, "malformed problem file: " + std::string(e.what())};
      }
      if (!j.is_object())
        throw Failure{usage, "problem file must hold a JSON object"};
    }
    if (d)
      j["d"] = *d;
    if (alpha)
      j["alpha"] = *alpha;
    if (!j.contains("alpha") && j.contains("d"))
      j["alpha"] = 0.0;
    Json ang = j.contains("angular") && j["angular"].is_object() ? j["angular"]
                                                                  : Json::object();
    if (angular)
      ang = Json{{"type", *angular}};
    if (!ang.contains("type"))
      ang["type"] = "free";
    if (a)
      ang["a"] = *a;
    if (flux)
      ang["flux"] = *flux;
    if (g)
      ang["g"] = *g;
    if (grid)
      ang["grid"] = *grid;
    if (!samples.empty())
      ang["samples"] = samples;
    j["angular"] = ang;
    if (!exclude.empty())
      j["exclude"] = exclude;
    if (role)
      j["weight_role"] = *role;
    return j;
  }
};

hrc::ProblemFile load_problem(const ProblemFlags &flags) {
  return hrc::parse_problem(flags.to_json());
}

// The constant of the problem's weight role, as a JSON object.
Json constant_json(const hrc::ProblemFile &pf, bool notes = false) {
  const hrc::ProblemSpec &p = pf.spec;
  if (p.d == 1) {
    if (pf.role != hrc::WeightRole::hardy_rellich)
      throw hrc::ArgumentError("d = 1 only has the Hardy-Rellich constant");
    hrc::ConstantResult r;
    r.value = hrc::one_d_hardy_rellich_constant(p.alpha);
    r.argmin_index = 0;
    r.modes_examined = 1;
    return hrc::to_json(r);
  }
  switch (pf.role) {
  case hrc::WeightRole::hardy:
    return hrc::to_json(hrc::hardy_constant(p));
  case hrc::WeightRole::rellich_product: {
    hrc::ProblemSpec shifted = p;
    shifted.alpha += 2.0;
    const auto hr = hrc::hardy_rellich_constant(p);
    const auto h = hrc::hardy_constant(shifted);
    Json j;
    j["value"] = hr.value * h.value;
    j["hardy_rellich"] = hrc::to_json(hr);
    j["hardy"] = hrc::to_json(h);
    return j;
  }
  case hrc::WeightRole::hardy_rellich:
    break;
  }
  const auto family = hrc::family_of(p.angular);
  if (family == hrc::SpectrumFamily::electric_const ||
      family == hrc::SpectrumFamily::aharonov_bohm || family == hrc::SpectrumFamily::monopole) {
    const auto named = hrc::named_constant(p);
    if (notes && !named.note.empty())
      std::cerr << "note: " << named.note << "\n";
    return hrc::to_json(named.general);
  }
  return hrc::to_json(hrc::hardy_rellich_constant(p));
}

std::string cell(const Json &v) {
  if (v.is_null())
    return "";
  if (v.is_number_float())
    return hrc::format_double(v.get<double>());
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

// --- subcommands -------------------------------------------------------------

int cmd_constant(const Globals &, const ProblemFlags &flags) {
  const auto pf = load_problem(flags);
  std::cout << constant_json(pf, true).dump() << "\n";
  return ok;
}

struct SweepFlags {
  std::string axis;
  double from = 0.0, to = 1.0;
  int steps = 11;
};

int cmd_sweep(const Globals &g, const ProblemFlags &flags, const SweepFlags &s) {
  if (s.steps < 2)
    throw hrc::ArgumentError("--steps must be >= 2");
  if (!std::isfinite(s.from) || !std::isfinite(s.to))
    throw hrc::ArgumentError("sweep range must be finite");
  Json base = flags.to_json();
  const std::string type = base["angular"].value("type", "free");
  const bool fits = s.axis == "alpha" || (s.axis == "flux" && type == "ab") ||
                    (s.axis == "a" && type == "electric-const") ||
                    (s.axis == "g" && type == "monopole");
  if (!fits)
    throw hrc::ArgumentError("axis '" + s.axis + "' does not apply to angular type '" +
                             type + "'");
  // the swept field need not be given
  if (s.axis == "alpha")
    base["alpha"] = s.from;
  else
    base["angular"][s.axis] = s.from;
  hrc::parse_problem(base);

  Json rows = Json::array();
  if (!g.json)
    std::cout << "param,value,argmin_index,branch\n";
  for (int i = 0; i < s.steps; ++i) {
    const double x = i + 1 == s.steps ? s.to : s.from + (s.to - s.from) * i / (s.steps - 1);
    Json point = base;
    if (s.axis == "alpha")
      point["alpha"] = x;
    else
      point["angular"][s.axis] = x;
    Json c;
    try {
      c = constant_json(hrc::parse_problem(point));
    } catch (const std::exception &e) {
      std::cout.flush();
      throw Failure{consistency, "row " + std::to_string(i) + " (" + s.axis + " = " +
                                     hrc::format_double(x) + "): " + e.what()};
    }
    const Json idx = c.contains("argmin_index") ? c["argmin_index"] : Json(nullptr);
    const Json branch = c.contains("branch") ? c["branch"] : Json(nullptr);
    if (g.json)
      rows.push_back({{"param", x}, {"value", c["value"]}, {"argmin_index", idx},
                      {"branch", branch}});
    else
      std::cout << hrc::format_double(x) << "," << cell(c["value"]) << "," << cell(idx) << ","
                << cell(branch) << "\n";
  }
  if (g.json)
    std::cout << rows.dump() << "\n";
  return ok;
}

struct MinimizeFlags {
  std::vector<double> eps;
  std::string branch;
};

int cmd_minimize(const Globals &g, const ProblemFlags &flags, const MinimizeFlags &m) {
  const auto pf = load_problem(flags);
  if (pf.spec.d < 2)
    throw hrc::ArgumentError("minimize needs d >= 2");
  std::optional<hrc::MinimizingBranch> forced;
  if (!m.branch.empty())
    forced = hrc::parse_branch(m.branch);
  const auto &eps = m.eps.empty() ? hrc::default_epsilons() : m.eps;
  const hrc::SweepTable t = hrc::minimizing_sweep(pf.spec, eps, forced);
  if (g.json) {
    std::cout << hrc::to_json(t).dump() << "\n";
  } else {
    std::cout << "epsilon,ratio,constant,gap,gap_times_log\n";
    for (const auto &r : t.rows)
      std::cout << hrc::format_double(r.epsilon) << "," << hrc::format_double(r.ratio) << ","
                << hrc::format_double(r.constant) << "," << hrc::format_double(r.gap) << ","
                << hrc::format_double(r.gap_times_log) << "\n";
  }
  if (!t.monotone || !t.law) {
    std::cerr << "sweep law failed:" << (t.monotone ? "" : " ratio not strictly decreasing")
              << (t.law ? "" : " gap*|ln 4eps^2| not bounded within a factor 4") << "\n";
    return sweep_law;
  }
  return ok;
}

int cmd_quotient(const Globals &g, const ProblemFlags &flags, const std::string &modes_file) {
  const auto pf = load_problem(flags);
  if (pf.role == hrc::WeightRole::rellich_product)
    throw hrc::ArgumentError("quotient supports the hardy-rellich and hardy roles");
  std::ifstream in(modes_file);
  if (!in)
    throw Failure{usage, "cannot open modes file '" + modes_file + "'"};
  Json mj;
  try {
    mj = Json::parse(in);
  } catch (const Json::exception &e) {
    throw Failure{usage, "malformed modes file: " + std::string(e.what())};
  }

  // The quotient is homogeneous of degree 0: factor out the first mode's
  // scale so a uniformly rescaled file reproduces the ratio bit for bit.
  double common = 1.0;
  if (mj.is_object() && mj.contains("modes") && mj["modes"].is_array())
    mj = mj["modes"];
  if (mj.is_array() && !mj.empty() && mj[0].is_object() && mj[0].contains("scale") &&
      mj[0]["scale"].is_number()) {
    common = mj[0]["scale"].get<double>();
    if (common == 0.0)
      throw hrc::ArgumentError("mode scale must be nonzero");
    for (auto &m : mj)
      if (m.is_object() && m.contains("scale") && m["scale"].is_number())
        m["scale"] = m["scale"].get<double>() / common;
      else if (m.is_object())
        m["scale"] = 1.0 / common;
  }
  const auto modes = hrc::parse_modes(mj, pf);

  std::vector<double> used;
  for (const auto &m : modes)
    used.push_back(m.eigenvalue);
  std::sort(used.begin(), used.end());
  const hrc::AngularSpectrum part(used, hrc::SpectrumFamily::custom, false);

  hrc::QuotientReport q;
  double c = 0.0;
  const int d = pf.spec.d;
  if (pf.role == hrc::WeightRole::hardy) {
    q = hrc::hardy_quotient(modes, d, pf.spec.alpha);
    c = hrc::hardy_constant(part, d, pf.spec.alpha).value;
  } else {
    q = hrc::hardy_rellich_quotient(modes, d, pf.spec.alpha);
    c = d == 1 ? hrc::one_d_hardy_rellich_constant(pf.spec.alpha)
               : hrc::hardy_rellich_constant(part, d, pf.spec.alpha).value;
  }
  const double k2 = common * common;
  q.numerator *= k2;
  q.denominator *= k2;
  q.error *= k2;
  for (auto &t : q.modes) {
    t.numerator *= k2;
    t.denominator *= k2;
    t.error *= k2;
  }

  Json j = hrc::to_json(q);
  j["role"] = hrc::to_string(pf.role);
  j["constant"] = c;
  std::cout << j.dump() << "\n";
  if (q.ratio < c * (1.0 - g.tol)) {
    std::cerr << "ratio " << hrc::format_double(q.ratio) << " violates the constant "
              << hrc::format_double(c) << "\n";
    return violation;
  }
  return ok;
}

int cmd_verify(const Globals &g, const std::string &suite, const std::string &report_path) {
  if (!hrc::is_suite(suite))
    throw Failure{usage, "unknown suite '" + suite +
                             "' (full | constants | spectra | quotients | sweeps)"};
  std::uint64_t seed = 0;
  try {
    std::size_t used = 0;
    seed = std::stoull(g.seed, &used, 0);
    if (used != g.seed.size())
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception &) {
    throw Failure{usage, "--seed must be an integer (decimal or 0x hex)"};
  }
  const hrc::VerificationReport r = hrc::run_suite(suite, seed);
  const Json j = hrc::to_json(r);

  const std::string path = report_path.empty() ? "verify_" + suite + ".json" : report_path;
  if (path != "-") {
    std::ofstream out(path);
    if (!out)
      throw Failure{usage, "cannot write report '" + path + "'"};
    out << j.dump(2) << "\n";
  }

  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto &c : r.records) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  expected "
                << hrc::format_double(c.expected) << "  actual "
                << hrc::format_double(c.actual) << "  tol " << hrc::format_double(c.tolerance)
                << "\n";
      failed += c.pass ? 0 : 1;
    }
    std::cout << "suite " << r.suite << ": " << (r.records.size() - failed) << "/"
              << r.records.size() << " checks passed, " << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  std::cerr << "wall time " << r.wall_time << " s\n";
  return r.pass ? ok : verify_failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sharp weighted Hardy-Rellich constants for perturbed Laplacians"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON instead of CSV / text output");
  app.add_option("--seed", g.seed, "RNG seed for verification suites")->capture_default_str();
  app.add_option("--tol", g.tol, "relative slack of the quotient inequality check")
      ->capture_default_str();

  ProblemFlags pflags;

  auto *constant = app.add_subcommand("constant", "sharp constant of a problem");
  pflags.attach(constant);

  SweepFlags sflags;
  auto *sweep = app.add_subcommand("sweep", "tabulate the constant along a parameter");
  pflags.attach(sweep);
  sweep->add_option("--axis", sflags.axis, "alpha | flux | a | g")
      ->required()
      ->check(CLI::IsMember({"alpha", "flux", "a", "g"}));
  sweep->add_option("--from", sflags.from, "first grid point")->required();
  sweep->add_option("--to", sflags.to, "last grid point")->required();
  sweep->add_option("--steps", sflags.steps, "number of grid points")->capture_default_str();

  MinimizeFlags mflags;
  auto *minimize = app.add_subcommand("minimize", "minimizing-sequence sweep");
  pflags.attach(minimize);
  minimize->add_option("--eps", mflags.eps, "decreasing epsilons")->delimiter(',');
  minimize->add_option("--branch", mflags.branch, "power | radial-log");

  std::string modes_file;
  auto *quotient = app.add_subcommand("quotient", "Rayleigh quotient of a mode set");
  pflags.attach(quotient);
  quotient->add_option("--modes", modes_file, "modes JSON file")->required();

  std::string suite, report;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "full | constants | spectra | quotients | sweeps")
      ->required();
  verify->add_option("--report", report, "JSON report path ('-' to skip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : usage;
  }

  try {
    if (*constant)
      return cmd_constant(g, pflags);
    if (*sweep)
      return cmd_sweep(g, pflags, sflags);
    if (*minimize)
      return cmd_minimize(g, pflags, mflags);
    if (*quotient)
      return cmd_quotient(g, pflags, modes_file);
    if (*verify)
      return cmd_verify(g, suite, report);
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const hrc::ArgumentError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const hrc::DegenerateInputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return consistency;
  }
  return usage;
}
