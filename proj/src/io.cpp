#include "hrc/io.hpp"

#include "hrc/errors.hpp"

#include <charconv>
#include <cmath>

namespace hrc {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ArgumentError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_number())
    throw ArgumentError(std::string("field \"") + key + "\" must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x))
    throw ArgumentError(std::string("field \"") + key + "\" must be finite");
  return x;
}

long long integer(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_number_integer())
    throw ArgumentError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::vector<double> numbers(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_array())
    throw ArgumentError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto &x : v) {
    if (!x.is_number())
      throw ArgumentError(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Json nullable(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

ProfilePtr parse_profile(const Json &j, const ProblemFile &problem) {
  const Json &type = field(j, "type");
  if (!type.is_string())
    throw ArgumentError("profile type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "bump")
    return make_spline_profile(numbers(j, "knots"), numbers(j, "coeffs"));
  if (t == "cutoff")
    return std::make_shared<CutoffProfile>(number(j, "epsilon"));
  if (t == "minimizing") {
    MinimizingBranch b = MinimizingBranch::power;
    if (j.contains("branch")) {
      if (!j["branch"].is_string())
        throw ArgumentError("profile branch must be a string");
      b = parse_branch(j["branch"].get<std::string>());
    }
    return minimizing_profile(number(j, "epsilon"), problem.spec.d, problem.spec.alpha, b);
  }
  throw ArgumentError("unknown profile type '" + t + "'");
}

} // namespace

std::string to_string(WeightRole role) {
  switch (role) {
  case WeightRole::hardy_rellich:
    return "hardy-rellich";
  case WeightRole::hardy:
    return "hardy";
  case WeightRole::rellich_product:
    return "rellich-product";
  }
  return "hardy-rellich";
}

WeightRole parse_weight_role(const std::string &s) {
  if (s == "hardy-rellich")
    return WeightRole::hardy_rellich;
  if (s == "hardy")
    return WeightRole::hardy;
  if (s == "rellich-product")
    return WeightRole::rellich_product;
  throw ArgumentError("unknown weight_role '" + s + "'");
}

MinimizingBranch parse_branch(const std::string &s) {
  if (s == "power")
    return MinimizingBranch::power;
  if (s == "radial-log")
    return MinimizingBranch::radial_log;
  throw ArgumentError("unknown branch '" + s + "' (power | radial-log)");
}

std::string to_string(MinimizingBranch b) {
  return b == MinimizingBranch::power ? "power" : "radial-log";
}

AngularOperator parse_angular(const Json &j) {
  if (!j.is_object())
    throw ArgumentError("\"angular\" must be an object");
  const Json &type = field(j, "type");
  if (!type.is_string())
    throw ArgumentError("angular type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "free")
    return FreeLaplacian{};
  if (t == "electric-const")
    return ConstantPotential{number(j, "a")};
  if (t == "ab")
    return AharonovBohm{number(j, "flux")};
  if (t == "monopole")
    return Monopole{number(j, "g")};
  if (t == "electric-profile") {
    if (j.contains("samples")) {
      std::vector<double> s = numbers(j, "samples");
      if (j.contains("grid") && integer(j, "grid") != static_cast<long long>(s.size()))
        throw ArgumentError("\"grid\" does not match the number of samples");
      return CirclePotential{std::move(s)};
    }
    const long long n = integer(j, "grid");
    if (n < 4)
      throw ArgumentError("\"grid\" must be >= 4");
    return CirclePotential{std::vector<double>(static_cast<std::size_t>(n), number(j, "a"))};
  }
  throw ArgumentError("unknown angular type '" + t + "'");
}

Json angular_to_json(const AngularOperator &op) {
  Json j;
  j["type"] = to_string(family_of(op));
  if (const auto *c = std::get_if<ConstantPotential>(&op))
    j["a"] = c->a;
  else if (const auto *p = std::get_if<CirclePotential>(&op)) {
    j["samples"] = p->samples;
    j["grid"] = p->samples.size();
  } else if (const auto *ab = std::get_if<AharonovBohm>(&op))
    j["flux"] = ab->flux;
  else if (const auto *m = std::get_if<Monopole>(&op))
    j["g"] = m->g;
  return j;
}

ProblemFile parse_problem(const Json &j) {
  if (!j.is_object())
    throw ArgumentError("problem must be a JSON object");
  ProblemFile pf;
  const long long d = integer(j, "d");
  if (d < 1 || d > 1000)
    throw ArgumentError("d must lie in [1, 1000]");
  pf.spec.d = static_cast<int>(d);
  pf.spec.alpha = number(j, "alpha");
  pf.spec.angular = j.contains("angular") ? parse_angular(j["angular"]) : FreeLaplacian{};
  if (j.contains("exclude")) {
    const Json &ex = j["exclude"];
    if (!ex.is_array())
      throw ArgumentError("\"exclude\" must be an array of indices");
    for (const auto &i : ex) {
      if (!i.is_number_integer() || i.get<long long>() < 0)
        throw ArgumentError("\"exclude\" entries must be non-negative integers");
      pf.spec.exclusion.indices.insert(static_cast<std::size_t>(i.get<long long>()));
    }
  }
  if (j.contains("weight_role")) {
    if (!j["weight_role"].is_string())
      throw ArgumentError("\"weight_role\" must be a string");
    pf.role = parse_weight_role(j["weight_role"].get<std::string>());
  }
  if (pf.spec.d >= 2)
    validate_operator(pf.spec.angular, pf.spec.d);
  else if (!std::holds_alternative<FreeLaplacian>(pf.spec.angular))
    throw ArgumentError("d = 1 only supports the free operator");
  return pf;
}

std::vector<ModeFunction> parse_modes(const Json &j, const ProblemFile &problem) {
  const Json &list = j.is_object() ? field(j, "modes") : j;
  if (!list.is_array())
    throw ArgumentError("modes must be an array");
  if (list.empty())
    throw ArgumentError("modes file lists no modes");
  std::vector<ModeFunction> modes;
  for (const auto &m : list) {
    if (!m.is_object())
      throw ArgumentError("each mode must be an object");
    ModeFunction mode;
    if (m.contains("index")) {
      const long long i = integer(m, "index");
      if (i < 0)
        throw ArgumentError("mode index must be >= 0");
      const auto idx = static_cast<std::size_t>(i);
      if (problem.spec.exclusion.contains(idx))
        throw ArgumentError("mode index " + std::to_string(i) + " is excluded");
      if (auto limit = max_enumeration(problem.spec.angular); limit && idx >= *limit)
        throw ArgumentError("mode index exceeds the resolvable spectrum");
      mode.eigenvalue = enumerate_spectrum(problem.spec.angular, problem.spec.d, idx + 1)[idx];
    } else {
      mode.eigenvalue = number(m, "eigenvalue");
    }
    mode.profile = parse_profile(field(m, "profile"), problem);
    if (m.contains("scale"))
      mode.profile = scale_profile(mode.profile, number(m, "scale"));
    modes.push_back(std::move(mode));
  }
  return modes;
}

Json to_json(const ConstantResult &r) {
  Json j;
  j["value"] = r.value;
  j["argmin_index"] = r.argmin_index ? Json(*r.argmin_index) : Json(nullptr);
  j["argmin_eigenvalue"] = r.argmin_eigenvalue;
  j["branch"] = to_string(r.branch);
  j["modes_examined"] = r.modes_examined;
  return j;
}

Json to_json(const QuotientReport &r) {
  Json j;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["ratio"] = r.ratio;
  j["error"] = r.error;
  Json modes;
  modes["eigenvalue"] = Json::array();
  modes["numerator"] = Json::array();
  modes["denominator"] = Json::array();
  modes["error"] = Json::array();
  for (const auto &m : r.modes) {
    modes["eigenvalue"].push_back(m.eigenvalue);
    modes["numerator"].push_back(m.numerator);
    modes["denominator"].push_back(m.denominator);
    modes["error"].push_back(m.error);
  }
  j["modes"] = std::move(modes);
  return j;
}

Json to_json(const SweepTable &t) {
  Json j;
  j["branch"] = to_string(t.branch);
  j["eigenvalue"] = t.eigenvalue;
  j["constant"] = t.constant;
  j["monotone"] = t.monotone;
  j["law"] = t.law;
  j["rows"] = Json::array();
  for (const auto &r : t.rows)
    j["rows"].push_back({{"epsilon", r.epsilon},
                         {"ratio", r.ratio},
                         {"constant", r.constant},
                         {"gap", r.gap},
                         {"gap_times_log", r.gap_times_log}});
  return j;
}

Json to_json(const CheckRecord &r) {
  return {{"name", r.name},
          {"expected", nullable(r.expected)},
          {"actual", nullable(r.actual)},
          {"tolerance", nullable(r.tolerance)},
          {"pass", r.pass}};
}

Json to_json(const VerificationReport &r, bool with_wall_time) {
  Json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["records"] = Json::array();
  for (const auto &c : r.records)
    j["records"].push_back(to_json(c));
  if (with_wall_time)
    j["wall_time"] = r.wall_time;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

} // namespace hrc
