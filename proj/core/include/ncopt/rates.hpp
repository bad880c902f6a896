#pragma once

#include <span>
#include <vector>

#include "ncopt/channel.hpp"

namespace ncopt {

// NOMA transmit SNR budget. Users are indexed 0..K-1 in decoding order:
// user 0 has the strongest average gain and sees no unicast interference
// after SIC; user i is interfered by users j < i.
struct PowerSplit {
  double rho = 0.0;            // total transmit SNR
  double rho_m = 0.0;          // multicast share
  double rho_u = 0.0;          // unicast share, rho_m + rho_u == rho
  std::vector<double> rho_i;   // per-user unicast SNRs, sum == rho_u

  // Builds a split from SNR-domain quantities; rho_u and rho follow from
  // the components.
  static PowerSplit from_snr(double rho_m, std::vector<double> rho_i);

  // Converts watt-domain quantities: beta_m is the multicast power
  // fraction, p_i_watts the per-user unicast powers (summing to p_watts),
  // noise_watts the AWGN power.
  static PowerSplit from_watts(double p_watts, double noise_watts,
                               double beta_m, std::span<const double> p_i_watts);

  std::size_t user_count() const noexcept { return rho_i.size(); }
  void validate() const;  // throws std::invalid_argument
};

struct RateVector {
  std::vector<double> r_m;  // per-user multicast rates [bit/s/Hz]
  std::vector<double> r_u;  // per-user unicast rates [bit/s/Hz]
};

// Multicast rate at a user with instantaneous gain lambda_i:
// log2(1 + rho_m * lambda / (rho_u * lambda + psi)).
double multicast_rate(const PowerSplit& split, double lambda_i,
                      const CsiCoefficients& coeffs);

// Unicast rate of user i with the exact per-user error term:
// log2(1 + rho_i * lambda / (sum_{j<i} rho_j * lambda
//                            + sum_{j<=i} rho_j * b + a)).
double unicast_rate_exact(const PowerSplit& split, std::size_t user,
                          double lambda_i, double a, double b);

// Lower-bound form: the error term is replaced by the constant psi, so
// the result never exceeds unicast_rate_exact.
double unicast_rate_relaxed(const PowerSplit& split, std::size_t user,
                            double lambda_i, double psi);

}  // namespace ncopt
