#include <cmath>
#include <string>

#include <doctest.h>

#include "ncopt/scenario.hpp"

using namespace ncopt;

namespace {

const char* kBase = R"(
# comment lines and inline comments are ignored
[channel]
f_c = 5.9e9
v = 41.6667      # m/s
tau = 1e-6
omega_eps = 0.1
convention = swapped

[users]
k = 2
omega = 10, 5

[power]
p_watts = 10
noise_watts = 1

[qos]
r_m = 0.3
delta_out = 0.1
r_min = 0.2

[cache]
f = 10
zeta = 1.0
n = 2
r_backhaul = 5

[solver]
tol = 1e-8
max_iter = 64

[trials]
n = 12345
seed = 99
)";

std::string patched(const std::string& needle, const std::string& replacement) {
  std::string text = kBase;
  const std::size_t at = text.find(needle);
  REQUIRE(at != std::string::npos);
  text.replace(at, needle.size(), replacement);
  return text;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("full scenario parses into a consistent instance") {
  const Scenario scenario = parse_scenario_text(kBase);
  CHECK(scenario.omega == std::vector<double>{10.0, 5.0});
  CHECK(scenario.qos.delta_out == 0.1);
  CHECK(scenario.solver.tol == 1e-8);
  CHECK(scenario.solver.max_iter == 64);
  CHECK(scenario.trials_n == 12345);
  CHECK(scenario.seed == 99);

  const ProblemInstance instance = scenario.to_instance();
  CHECK(instance.rho == doctest::Approx(10.0));
  CHECK(instance.user_count() == 2);
  CHECK(instance.catalog.file_count() == 10);
  CHECK(instance.lambda == scenario.omega);
  // Swapped convention at the highway correlation: psi barely above 1.
  CHECK(instance.coeffs.psi == doctest::Approx(1.0000266).epsilon(1e-6));
  CHECK(instance.coeffs.a > 1.0);
  CHECK(instance.coeffs.b > 0.0);
}

TEST_CASE("solver and trials sections are optional with defaults") {
  std::string text(kBase);
  text = text.substr(0, text.find("[solver]"));
  const Scenario scenario = parse_scenario_text(text);
  CHECK(scenario.solver.tol == 1e-6);
  CHECK(scenario.solver.max_iter == 100);
  CHECK(scenario.trials_n == 100000);
  CHECK(scenario.seed == 1);
}

TEST_CASE("strict mode rejects unknown and malformed input") {
  CHECK_THROWS_AS(parse_scenario_text(patched("zeta = 1.0", "zeta = 1.0\nshape = spiral")),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("[cache]", "[caching]")), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("tau = 1e-6", "tau = 1e-6\ntau = 2e-6")),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("r_m = 0.3", "r_m : 0.3")), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("v = 41.6667      # m/s", "v = fast")),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("convention = swapped", "convention = maybe")),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("k = 2"), ScenarioError);  // key before any section
}

TEST_CASE("missing sections and mismatched users are rejected") {
  const std::string no_power = patched(
      "[power]\np_watts = 10\nnoise_watts = 1\n", "");
  CHECK_THROWS_AS(parse_scenario_text(no_power), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text(patched("k = 2", "k = 3")), ScenarioError);
}

TEST_CASE("gain ordering is enforced when building the instance") {
  const Scenario scenario = parse_scenario_text(patched("omega = 10, 5", "omega = 5, 10"));
  CHECK_THROWS_AS(scenario.to_instance(), std::invalid_argument);
}

TEST_CASE("missing file reports a readable error") {
  CHECK_THROWS_AS(parse_scenario_file("/nonexistent/path.scenario"), ScenarioError);
}

}  // TEST_SUITE
