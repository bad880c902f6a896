#include "ncopt/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ncopt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view origin, std::size_t line, const std::string& what) {
  std::ostringstream msg;
  msg << origin << ":" << line << ": " << what;
  throw ScenarioError(msg.str());
}

// section -> allowed keys; every key is required unless the section is
// optional and absent as a whole.
const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"channel", {"f_c", "v", "tau", "omega_eps", "convention"}},
      {"users", {"k", "omega"}},
      {"power", {"p_watts", "noise_watts"}},
      {"qos", {"r_m", "delta_out", "r_min"}},
      {"cache", {"f", "zeta", "n", "r_backhaul"}},
      {"solver", {"tol", "max_iter"}},
      {"trials", {"n", "seed"}},
  };
  return s;
}

struct RawScenario {
  std::string_view origin;
  std::map<std::string, std::map<std::string, std::pair<std::string, std::size_t>>> values;

  bool has_section(const std::string& section) const { return values.contains(section); }

  const std::pair<std::string, std::size_t>& get(const std::string& section,
                                                 const std::string& key) const {
    const auto sit = values.find(section);
    if (sit == values.end() || !sit->second.contains(key)) {
      std::ostringstream msg;
      msg << origin << ": missing required key [" << section << "] " << key;
      throw ScenarioError(msg.str());
    }
    return sit->second.at(key);
  }

  double number(const std::string& section, const std::string& key) const {
    const auto& [text, line] = get(section, key);
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
      fail(origin, line, "not a number: '" + text + "'");
    return value;
  }

  std::uint64_t unsigned_int(const std::string& section, const std::string& key) const {
    const auto& [text, line] = get(section, key);
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE ||
        text.find('-') != std::string::npos)
      fail(origin, line, "not a non-negative integer: '" + text + "'");
    return value;
  }

  std::vector<double> number_list(const std::string& section, const std::string& key) const {
    const auto& [text, line] = get(section, key);
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      const std::string item(trim(std::string_view(text).substr(start, comma - start)));
      if (item.empty()) fail(origin, line, "empty entry in list");
      errno = 0;
      char* end = nullptr;
      const double value = std::strtod(item.c_str(), &end);
      if (end == item.c_str() || *end != '\0' || errno == ERANGE)
        fail(origin, line, "not a number: '" + item + "'");
      values.push_back(value);
      start = comma + 1;
      if (comma == text.size()) break;
    }
    return values;
  }
};

RawScenario tokenize(std::string_view text, std::string_view origin) {
  RawScenario raw;
  raw.origin = origin;
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    std::string_view line = text.substr(start, eol - start);
    start = eol + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().contains(section))
        fail(origin, line_no, "unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(origin, line_no, "expected 'key = value'");
    if (section.empty()) fail(origin, line_no, "key outside any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!schema().at(section).contains(key))
      fail(origin, line_no, "unknown key '" + key + "' in section [" + section + "]");
    if (raw.values[section].contains(key))
      fail(origin, line_no, "duplicate key '" + key + "' in section [" + section + "]");
    if (value.empty()) fail(origin, line_no, "empty value for key '" + key + "'");
    raw.values[section][key] = {value, line_no};
  }
  return raw;
}

}  // namespace

Scenario parse_scenario_text(std::string_view text, std::string_view origin) {
  const RawScenario raw = tokenize(text, origin);
  for (const char* required : {"channel", "users", "power", "qos", "cache"}) {
    if (!raw.has_section(required)) {
      std::ostringstream msg;
      msg << origin << ": missing required section [" << required << "]";
      throw ScenarioError(msg.str());
    }
  }

  Scenario scenario;
  scenario.channel.f_c = raw.number("channel", "f_c");
  scenario.channel.v = raw.number("channel", "v");
  scenario.channel.tau = raw.number("channel", "tau");
  scenario.channel.omega_eps = raw.number("channel", "omega_eps");
  {
    const auto& [text_value, line] = raw.get("channel", "convention");
    if (text_value == "as_written")
      scenario.channel.convention = CsiConvention::AsWritten;
    else if (text_value == "swapped")
      scenario.channel.convention = CsiConvention::Swapped;
    else
      fail(origin, line, "convention must be 'as_written' or 'swapped'");
  }

  const std::uint64_t k = raw.unsigned_int("users", "k");
  scenario.omega = raw.number_list("users", "omega");
  if (scenario.omega.size() != k) {
    std::ostringstream msg;
    msg << origin << ": omega has " << scenario.omega.size() << " entries but k = " << k;
    throw ScenarioError(msg.str());
  }

  scenario.p_watts = raw.number("power", "p_watts");
  scenario.noise_watts = raw.number("power", "noise_watts");
  scenario.qos.r_target = raw.number("qos", "r_m");
  scenario.qos.delta_out = raw.number("qos", "delta_out");
  scenario.r_min = raw.number("qos", "r_min");
  scenario.file_count = raw.unsigned_int("cache", "f");
  scenario.zeta = raw.number("cache", "zeta");
  scenario.cache_n = raw.number("cache", "n");
  scenario.r_backhaul = raw.number("cache", "r_backhaul");

  if (raw.has_section("solver")) {
    scenario.solver.tol = raw.number("solver", "tol");
    scenario.solver.max_iter = raw.unsigned_int("solver", "max_iter");
  }
  scenario.trials_n = 100000;
  scenario.seed = 1;
  if (raw.has_section("trials")) {
    scenario.trials_n = raw.unsigned_int("trials", "n");
    scenario.seed = raw.unsigned_int("trials", "seed");
  }
  return scenario;
}

Scenario parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

ProblemInstance Scenario::to_instance() const {
  channel.validate();
  if (!(p_watts > 0.0)) throw ScenarioError("power: p_watts must be > 0");
  if (!(noise_watts > 0.0)) throw ScenarioError("power: noise_watts must be > 0");

  const double rho = p_watts / noise_watts;
  const double phi = jakes_phi(channel);
  const CsiCoefficients coeffs =
      csi_coefficients(phi, channel.omega_eps, rho, channel.convention);
  return ProblemInstance::nominal(UserGains(omega), coeffs, qos, r_min, rho,
                                  zipf_popularity(file_count, zeta), cache_n,
                                  r_backhaul);
}

}  // namespace ncopt
