#pragma once

#include <vector>

#include "ncopt/instance.hpp"
#include "ncopt/rates.hpp"

namespace ncopt {

// Orthogonal baseline: time division with every transmission at full SNR.
// The multicast slot alpha_m is the smallest fraction meeting the outage
// target for all users, each alpha_i the smallest fraction meeting r_min,
// and all leftover time goes to the strongest user, capped so the unicast
// sum rate stays within the effective backhaul ceiling of its own greedy
// cache placement.
struct OmaAllocation {
  double alpha_m = 0.0;        // multicast slot fraction
  std::vector<double> alpha;   // per-user unicast fractions
  RateVector rates;            // time-averaged per-user rates
  double sum_rate = 0.0;       // unicast sum rate [bit/s/Hz]
  CachePolicy policy;          // greedy placement used for the cap
};

// Throws InfeasibleError when the minimal fractions already exceed one
// frame (kind Rate) or the backhaul cannot carry K * r_min (kind
// Backhaul).
OmaAllocation oma_rates(const ProblemInstance& instance);

}  // namespace ncopt
