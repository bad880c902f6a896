#pragma once

// Seeded random generators for property tests. Built on the library Rng so
// every test run sees the same draws.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "ncopt/channel.hpp"
#include "ncopt/instance.hpp"
#include "ncopt/outage.hpp"
#include "ncopt/rates.hpp"
#include "ncopt/rng.hpp"
#include "ncopt/solver.hpp"

namespace ncopt::testing {

// Raw per-user excess realizing a chosen non-negative transformed excess
// vector: each user gets its effective share plus the top-up that keeps it
// at r_min under the stronger users' extra interference. Raw splits built
// this way are exactly the ones that keep every user at or above r_min.
inline std::vector<double> raw_excess_from_transformed(
    const std::vector<double>& rho_e, double r_min) {
  const std::size_t k = rho_e.size();
  const double theta = std::exp2(r_min) - 1.0;
  std::vector<double> delta(k);
  double prefix = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double scale = std::exp2(static_cast<double>(k - 1 - i) * r_min);
    delta[i] = rho_e[i] / scale + theta * prefix;
    prefix += delta[i];
  }
  return delta;
}

class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform01(); }

  std::size_t uniform_index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng_.next_u64() % (hi - lo + 1));
  }

  std::vector<double> sorted_gains(std::size_t k, double lo = 0.5, double hi = 20.0) {
    std::vector<double> omega(k);
    for (double& w : omega) w = uniform(lo, hi);
    std::sort(omega.begin(), omega.end(), std::greater<>());
    return omega;
  }

  // Positive vector summing to `total`.
  std::vector<double> simplex(std::size_t k, double total) {
    std::vector<double> parts(k);
    double sum = 0.0;
    for (double& p : parts) {
      p = rng_.exponential(1.0);
      sum += p;
    }
    for (double& p : parts) p *= total / sum;
    return parts;
  }

  CsiCoefficients coefficients(double rho, double phi_max = 0.7) {
    const double phi = uniform(0.0, phi_max);
    const double omega_eps = uniform(0.0, 0.3);
    return csi_coefficients(phi, omega_eps, rho, CsiConvention::AsWritten);
  }

  // A power split with every component strictly positive and
  // rho_m > theta * rho_u, so the closed-form outage regime is valid.
  struct OutageCase {
    MulticastQos qos;
    PowerSplit split;
    double omega = 1.0;
    CsiCoefficients coeffs;
  };

  OutageCase outage_case() {
    OutageCase c;
    const double rho = uniform(2.0, 40.0);
    c.qos.r_target = uniform(0.05, 1.5);
    c.qos.delta_out = uniform(0.02, 0.4);
    const std::size_t k = uniform_index(1, 4);
    const double rho_u = uniform(0.05, 0.9) * rho / std::exp2(c.qos.r_target);
    c.split = PowerSplit::from_snr(rho - rho_u, simplex(k, rho_u));
    c.omega = uniform(0.5, 20.0);
    c.coeffs = coefficients(rho);
    return c;
  }

  // Unconstrained instance draw; may be infeasible.
  ProblemInstance random_instance() {
    const std::size_t k = uniform_index(1, 4);
    const double rho = uniform(5.0, 40.0);
    MulticastQos qos{uniform(0.05, 0.8), uniform(0.05, 0.3)};
    const std::size_t files = uniform_index(3, 12);
    const double capacity = uniform(0.0, static_cast<double>(files));
    return ProblemInstance::nominal(UserGains(sorted_gains(k, 1.0, 20.0)),
                                    coefficients(rho), qos, uniform(0.0, 0.5), rho,
                                    zipf_popularity(files, uniform(0.0, 2.0)),
                                    capacity, uniform(1.5, 12.0));
  }

  // Rejection-samples until the full constraint set admits a solution.
  ProblemInstance feasible_instance() {
    for (int attempt = 0; attempt < 2000; ++attempt) {
      ProblemInstance instance = random_instance();
      if (feasibility_report(instance).feasible) return instance;
    }
    throw std::runtime_error("feasible_instance: rejection sampling exhausted");
  }

 private:
  Rng rng_;
};

}  // namespace ncopt::testing
