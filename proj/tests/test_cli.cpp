#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetforge/json.hpp"
#include "jetforge_cli/cli.hpp"

using namespace jetforge;
namespace cli = jetforge::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "jetforge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool scalar_array(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

bool matrix(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive() || scalar_array(e); });
}

// Reference rendering of the text format: one "path: value" line per leaf,
// vectors and matrices of scalars kept whole.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !matrix(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("jetforge_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, JetIdealRoundTrips) {
  const auto r = run({"jet-ideal", "--vars", "x,y", "--poly", "x^2 + y^3", "-m", "2"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const Symbols symbols({"x", "y"});
  const auto doc = r.json();
  EXPECT_EQ(doc["m"], 2);
  EXPECT_EQ(doc["generators"].size(), 3U);
  EXPECT_EQ(jet_ideal_from_json(doc, symbols), jet_ideal(parse("x^2 + y^3", symbols), 2));
}

TEST(Cli, NewtonAndFanRoundTrip) {
  const auto newton = run({"newton", "--vars", "x,y", "--poly", "x^2 + y^3"});
  ASSERT_EQ(newton.code, cli::ok) << newton.err;
  const auto P = newton_polyhedron(parse_rational("x^2 + y^3", {"x", "y"}));
  EXPECT_EQ(polyhedron_from_json(newton.json()).vertices(), P.vertices());
  EXPECT_EQ(newton.json()["facets"][2]["normal"], Json::parse("[3,2]"));
  EXPECT_EQ(newton.json()["facets"][2]["offset"], 6);

  const auto fan = run({"fan", "--vars", "x,y", "--poly", "x^2 + y^3"});
  ASSERT_EQ(fan.code, cli::ok);
  EXPECT_EQ(fan_from_json(fan.json()), newton_fan(P));
}

TEST(Cli, ResolveCusp) {
  const auto r = run({"resolve", "--vars", "x,y", "--poly", "x^2 + y^3"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.json()["rays"], Json::parse("[[0,1],[1,0],[1,1],[2,1],[3,2]]"));
  EXPECT_TRUE(is_regular(fan_from_json(r.json())));
}

TEST(Cli, TextFormatCarriesTheJsonData) {
  const std::vector<std::vector<std::string>> commands{
      {"jet-ideal", "--vars", "x,y", "--params", "s", "--family", "x^2 + s*y", "-m", "1"},
      {"newton", "--vars", "x,y,z", "--poly", "x^4 + y^4 + z^4"},
      {"fan", "--vars", "x,y", "--poly", "x^5 + x^2*y + y^4"},
      {"check", "nondegenerate", "--vars", "x,y", "--poly", "x^2 + 2*x*y + y^2"},
      {"check", "gamma-deformation", "--vars", "x,y", "--base", "x^2 + y^3", "--perturb", "x*y", "--perturb", "y^4"},
      {"diagnose-flatness", "--vars", "x,y", "--params", "s", "--family", "x^2 + y^2 + s*x^2", "-m", "1"},
      {"leibniz", "--vars", "x,y", "--f", "x + y", "--g", "x*y", "-m", "2"},
  };
  for (auto args : commands) {
    const auto json = run(args);
    args.insert(args.end(), {"--format", "text"});
    const auto text = run(args);
    EXPECT_EQ(json.code, text.code);
    std::ostringstream expected;
    flatten(json.json(), "", expected);
    EXPECT_EQ(text.out, expected.str()) << args[0];
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "nondegenerate", "--vars", "x,y", "--poly", "x^2 + y^3"}).code, cli::ok);
  EXPECT_EQ(run({"check", "nondegenerate", "--vars", "x,y", "--poly", "x^2 + 2*x*y + y^2"}).code,
            cli::negative_verdict);
  EXPECT_EQ(run({"check", "gamma-deformation", "--vars", "x,y", "--base", "x^2 + y^3", "--perturb", "x*y"}).code,
            cli::negative_verdict);
  EXPECT_EQ(run({"newton", "--vars", "x,y", "--poly", "x^2 + ^3"}).code, cli::input_error);
  EXPECT_EQ(run({"newton", "--vars", "x,y", "--poly", "x^2 + w"}).code, cli::input_error);
  EXPECT_EQ(run({"newton", "--poly", "x"}).code, cli::input_error);
  EXPECT_EQ(run({"count", "--vars", "x,y", "--poly", "x + y", "--prime", "4"}).code, cli::input_error);
  EXPECT_EQ(run({"frobnicate"}).code, cli::input_error);
  EXPECT_EQ(run({"count", "--vars", "x,y", "--poly", "x + y", "-m", "20", "--prime", "3"}).code, cli::limit_error);
  EXPECT_EQ(run({"resolve", "--vars", "a,b,c,d", "--poly", "a^2 + b^2 + c^2 + d^2"}).code, cli::limit_error);
  EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Cli, ErrorsGoToStderr) {
  const auto r = run({"newton", "--vars", "x,y", "--poly", "x^2 + w"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, NondegenerateWitness) {
  const auto r = run({"check", "nondegenerate", "--vars", "x,y", "--poly", "x^2 + 2*x*y + y^2"});
  const auto doc = r.json();
  EXPECT_EQ(doc["verdict"], "degenerate");
  EXPECT_EQ(doc["witness"]["field"], "Q");
  EXPECT_EQ(doc["witness"]["point"], Json::parse(R"(["-1","1"])"));
}

TEST(Cli, CountAndAssignments) {
  const auto r = run({"count", "--vars", "x,y,z", "--params", "s", "--poly", "x^4 + y^4 + z^4 + s", "--assign",
                      "s=1", "-m", "3", "--prime", "3", "--workers", "2"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto doc = r.json();
  EXPECT_EQ(doc["assignment"]["s"], 1);
  EXPECT_EQ(doc["counts"][0]["count"], 8748);
  EXPECT_EQ(run({"count", "--vars", "x,y", "--params", "s", "--poly", "x + s*y", "--assign", "t=1", "--prime", "3"})
                .code,
            cli::input_error);
}

TEST(Cli, InputFile) {
  const auto path = write_temp("input.txt", "# cusp\nvars: x, y\n\nx^2 + y^3  # the curve\n");
  const auto r = run({"newton", "--input", path.string()});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.out, run({"newton", "--vars", "x,y", "--poly", "x^2 + y^3"}).out);
  EXPECT_EQ(run({"newton", "--input", "/nonexistent/jetforge"}).code, cli::input_error);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileWithFlagPrecedence) {
  const auto path = write_temp("config.toml", "vars = [\"x\", \"y\"]\npoly = \"x^2 + y^3\"\nformat = \"text\"\n");
  const auto from_config = run({"--config", path.string(), "fan"});
  ASSERT_EQ(from_config.code, cli::ok) << from_config.err;
  EXPECT_EQ(from_config.out.rfind("dim: 2\n", 0), 0U);
  const auto overridden = run({"--config", path.string(), "fan", "--format", "json"});
  EXPECT_EQ(fan_from_json(overridden.json()), newton_fan(newton_polyhedron(parse_rational("x^2 + y^3", {"x", "y"}))));
  std::filesystem::remove(path);
}

TEST(Cli, GammaViolationsNamePerturbations) {
  const auto r =
      run({"check", "gamma-deformation", "--vars", "x,y", "--base", "x^2 + y^3", "--perturb", "y^4", "--perturb", "x*y"});
  EXPECT_EQ(r.code, cli::negative_verdict);
  const auto doc = r.json();
  EXPECT_EQ(doc["valid"], false);
  ASSERT_EQ(doc["violations"].size(), 1U);
  EXPECT_EQ(doc["violations"][0]["perturbation"], 2);
  EXPECT_EQ(doc["violations"][0]["exponent"], Json::parse("[1,1]"));
}

TEST(Cli, QuarticGammaViolator) {
  const auto r = run({"check", "gamma-deformation", "--vars", "x,y", "--base", "x^4+y^4", "--perturb", "x*y"});
  EXPECT_EQ(r.code, cli::negative_verdict);
  EXPECT_EQ(r.json()["violations"][0]["exponent"], Json::parse("[1,1]"));
}

TEST(Cli, FermatQuarticFamilyOverThreeAndFive) {
  // The s=1 fiber has no points over F_5, so only one sample is estimable.
  const auto r = run({"diagnose-flatness", "--vars", "x,y,z", "--params", "s", "--family", "x^4+y^4+z^4+s", "-m", "3",
                      "--primes", "3,5", "--samples", "s=0", "s=1"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto doc = r.json();
  EXPECT_EQ(doc["verdict"], "INSUFFICIENT-SAMPLES");
  EXPECT_EQ(doc["samples"][0]["dim_estimate"], 9);
  EXPECT_EQ(doc["samples"][1]["counts"][1]["count"], 0);
  EXPECT_TRUE(doc["samples"][1]["dim_estimate"].is_null());
}

TEST(Cli, DimensionJumpExitsOne) {
  const auto r = run({"diagnose-flatness", "--vars", "x,y", "--params", "s", "--family", "s*x + x^2", "-m", "1",
                      "--primes", "3,5,7"});
  EXPECT_EQ(r.code, cli::negative_verdict) << r.err;
  EXPECT_EQ(r.json()["verdict"], "DIMENSION-JUMP");
}

TEST(Cli, DuplicateNamesRejected) {
  EXPECT_EQ(run({"newton", "--vars", "x,x", "--poly", "x"}).code, cli::input_error);
  EXPECT_EQ(run({"newton", "--vars", "x,y", "--params", "y", "--poly", "x"}).code, cli::input_error);
}
