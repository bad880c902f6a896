#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncopt/channel.hpp"
#include "ncopt/instance.hpp"
#include "ncopt/solver.hpp"

namespace ncopt {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat scenario file: '#' comments, [section] headers, key = value lines.
// Sections and keys are fixed; unknown ones are rejected.
//
//   [channel]  f_c, v, tau, omega_eps, convention (as_written | swapped)
//   [users]    k, omega (comma list, non-increasing, length k)
//   [power]    p_watts, noise_watts
//   [qos]      r_m, delta_out, r_min
//   [cache]    f, zeta, n, r_backhaul
//   [solver]   tol, max_iter
//   [trials]   n, seed
struct Scenario {
  ChannelParams channel;
  std::vector<double> omega;
  double p_watts = 0.0;
  double noise_watts = 0.0;
  MulticastQos qos;
  double r_min = 0.0;
  std::size_t file_count = 0;
  double zeta = 0.0;
  double cache_n = 0.0;
  double r_backhaul = 0.0;
  SolverOptions solver;
  std::size_t trials_n = 0;
  std::uint64_t seed = 0;

  // Derives phi from the channel physics, converts watts to SNRs and
  // assembles the nominal problem instance.
  ProblemInstance to_instance() const;
};

Scenario parse_scenario_text(std::string_view text,
                             std::string_view origin = "<memory>");
Scenario parse_scenario_file(const std::filesystem::path& path);

}  // namespace ncopt
