#pragma once

#include <cstdint>
#include <vector>

#include "ncopt/channel.hpp"
#include "ncopt/rates.hpp"

namespace ncopt {

// Multicast quality-of-service target.
struct MulticastQos {
  double r_target = 0.0;   // target rate R_M [bit/s/Hz], >= 0
  double delta_out = 0.1;  // outage threshold, strictly inside (0, 1)

  double theta() const;    // 2^r_target - 1
  void validate() const;   // throws std::domain_error
};

// Closed-form multicast outage probability under Rayleigh gains with
// variance omega_i:
//   1 - exp(-psi * theta / ((rho_m - theta * rho_u) * omega_i)).
// Returns 0 when the target rate is zero and 1 when rho_m <= theta*rho_u
// (no gain realization can reach the target).
double outage_closed_form(const MulticastQos& qos, const PowerSplit& split,
                          double omega_i, double psi);

// Empirical estimate: fraction of n_trials sampled gains whose multicast
// rate falls below the target. Deterministic in `seed`. This is the
// independent validation path for the closed form.
double outage_monte_carlo(const MulticastQos& qos, const PowerSplit& split,
                          double omega_i, const CsiCoefficients& coeffs,
                          std::size_t n_trials, std::uint64_t seed);

struct OutagePowerBound {
  double bound = 0.0;              // min over users: largest admissible rho_u
  std::size_t binding_user = 0;    // argmin (ties to the lowest index)
  std::vector<double> per_user;    // per-user bounds, diagnostic
};

// Largest unicast SNR for which every user's multicast outage stays at or
// below delta:
//   min_i  psi*theta / (2^R_M * omega_i * ln(1 - delta)) + rho / 2^R_M.
// The first term is negative, so the weakest user binds. Throws
// InfeasibleError{Multicast} when the bound is not positive (no unicast
// power keeps all users inside the outage budget).
OutagePowerBound outage_power_bound(const MulticastQos& qos,
                                    const UserGains& omega, double psi,
                                    double rho);

}  // namespace ncopt
