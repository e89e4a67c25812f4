#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
};

std::filesystem::path workdir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "hrc_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string &args) {
  const std::string cmd =
      "cd '" + workdir().string() + "' && '" HRC_CLI "' " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write(const std::string &name, const std::string &body) {
  const auto path = workdir() / name;
  std::ofstream(path) << body;
  return path.string();
}

std::vector<std::vector<std::string>> csv(const std::string &s) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ','))
      cells.push_back(c);
    if (!line.empty() && line.back() == ',')
      cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double value_of(const std::string &json) {
  return nlohmann::json::parse(json)["value"].get<double>();
}

} // namespace

TEST_CASE("constant") {
  auto r = run("constant --d 3 --alpha 0 --angular free");
  CHECK(r.code == 0);
  CHECK(value_of(r.out) == doctest::Approx(25.0 / 36).epsilon(1e-15));
  CHECK(r.out.find("\"value\":0.6944444444444444") != std::string::npos);

  r = run("constant --d 2 --alpha 0 --angular ab --flux 0.5");
  CHECK(r.code == 0);
  CHECK(value_of(r.out) == doctest::Approx(0.45).epsilon(1e-14));

  r = run("constant --d 1 --alpha 2");
  CHECK(r.code == 0);
  CHECK(value_of(r.out) == 2.25);

  const auto file = write("p.json", R"({"d": 4, "alpha": 0, "weight_role": "hardy"})");
  r = run("constant --problem " + file);
  CHECK(r.code == 0);
  CHECK(value_of(r.out) == 1.0);

  CHECK(run("constant --d 3 --angular monopole --g 0.3").code == 2);
  CHECK(run("constant --d 3 --alpha nope").code == 2);
  CHECK(run("constant --problem /nonexistent.json").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("sweep") {
  auto r = run("sweep --d 2 --alpha 0 --angular ab --axis flux --from 0 --to 1 --steps 11");
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"param", "value", "argmin_index", "branch"});
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[6][1]) == doctest::Approx(0.45).epsilon(1e-14));
  for (int i = 1; i <= 11; ++i)
    CHECK(std::stod(rows[i][1]) == doctest::Approx(std::stod(rows[12 - i][1])).epsilon(1e-12));

  r = run("sweep --d 4 --axis alpha --from -2 --to 2 --steps 5");
  rows = csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[3][0] == "0");
  CHECK(rows[3][3] == "degenerate");
  CHECK(rows[1][3] == "generic");

  r = run("sweep --d 2 --angular electric-const --axis a --from 2 --to 5 --steps 4");
  rows = csv(r.out);
  REQUIRE(rows.size() == 5);
  for (int i = 1; i <= 4; ++i) {
    const double a = std::stod(rows[i][0]);
    CHECK(std::stod(rows[i][1]) == doctest::Approx((a - 1) * (a - 1) / (a + 1)).epsilon(1e-14));
  }

  CHECK(run("sweep --d 3 --angular monopole --g 0.5 --axis g --from 0.5 --to 1 --steps 3").code == 3);
  CHECK(run("sweep --d 3 --axis flux --from 0 --to 1").code == 2);
  CHECK(run("sweep --d 3 --axis alpha --from 0 --to 1 --steps 1").code == 2);
}

TEST_CASE("minimize") {
  auto r = run("minimize --d 5 --alpha 0");
  CHECK(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"epsilon", "ratio", "constant", "gap", "gap_times_log"});
  for (int i = 2; i <= 5; ++i)
    CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
  CHECK(std::stod(rows[5][2]) == 6.25);

  r = run("minimize --d 3 --alpha 0");
  CHECK(r.code == 0);
  CHECK(std::stod(csv(r.out)[5][2]) == doctest::Approx(25.0 / 36));

  r = run("minimize --d 4 --alpha 0 --branch radial-log");
  CHECK(r.code == 0);
  rows = csv(r.out);
  CHECK(std::stod(rows[5][2]) == 4.0);
  CHECK(std::stod(rows[5][1]) < std::stod(rows[1][1]));

  CHECK(run("minimize --d 5 --alpha 0 --eps 0.4,0.0001").code == 4);
  CHECK(run("minimize --d 5 --alpha 0 --branch radial-log").code == 2);
  CHECK(run("minimize --d 5 --alpha 0 --eps 0.001,0.01").code == 2);
}

TEST_CASE("quotient") {
  const std::string bump = R"({"type": "bump", "knots": [1, 1.3, 1.6, 2.0, 2.4], "coeffs": [1]})";
  const auto one = write("m1.json", R"({"modes": [{"index": 0, "profile": )" + bump + "}]}");
  const auto seven =
      write("m7.json", R"({"modes": [{"index": 0, "profile": )" + bump + R"(, "scale": 7}]})");
  auto a = run("quotient --d 3 --alpha 0 --modes " + one);
  auto b = run("quotient --d 3 --alpha 0 --modes " + seven);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["ratio"].get<double>() >= 25.0 / 36);
  CHECK(ja["ratio"].dump() == jb["ratio"].dump());
  CHECK(jb["numerator"].get<double>() ==
        doctest::Approx(49 * ja["numerator"].get<double>()).epsilon(1e-14));
  CHECK(ja["modes"]["numerator"].size() == 1);

  CHECK(run("quotient --d 3 --modes " + write("e.json", R"({"modes": []})")).code == 2);
  CHECK(run("quotient --d 3 --modes " + write("x.json", "{not json")).code == 2);
  CHECK(run("--tol -1000 quotient --d 3 --modes " + one).code == 5);
}

TEST_CASE("verify") {
  auto a = run("verify constants --seed 0x5EED --report a.json");
  auto b = run("verify constants --seed 0x5EED --report b.json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::ifstream fa(workdir() / "a.json"), fb(workdir() / "b.json");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(!sa.str().empty());
  CHECK(sa.str() == sb.str());
  CHECK(nlohmann::json::parse(sa.str())["pass"] == true);

  CHECK(run("verify bogus").code == 2);
  CHECK(run("verify constants --seed zz --report -").code == 2);
  CHECK(run("--json verify sweeps --report -").code == 0);
}
