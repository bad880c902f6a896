#pragma once

#include <vector>

#include "ncopt/cache.hpp"
#include "ncopt/channel.hpp"
#include "ncopt/outage.hpp"

namespace ncopt {

// Everything one optimization run needs. `lambda` is the gain realization
// the rates are evaluated at: the nominal average gains by default, or a
// sampled realization in per-trial studies. The decoding order is fixed by
// the average gains, so lambda is indexed by user and need not be sorted.
struct ProblemInstance {
  UserGains gains;              // average gains, strongest first
  std::vector<double> lambda;   // working realization, size == gains.size()
  CsiCoefficients coeffs;       // derived at total SNR `rho`
  MulticastQos qos;
  double r_min = 0.0;           // per-user minimum unicast rate [bit/s/Hz]
  double rho = 0.0;             // total transmit SNR
  Catalog catalog;
  double cache_capacity = 0.0;  // N [files]
  double backhaul = 0.0;        // R [bit/s/Hz]

  std::size_t user_count() const noexcept { return gains.size(); }
  void validate() const;  // throws std::invalid_argument

  // Instance with lambda set to the nominal average gains.
  static ProblemInstance nominal(UserGains gains, CsiCoefficients coeffs,
                                 MulticastQos qos, double r_min, double rho,
                                 Catalog catalog, double cache_capacity,
                                 double backhaul);

  // Same instance evaluated at a different gain realization.
  ProblemInstance with_lambda(std::vector<double> lambda_realization) const;
};

}  // namespace ncopt
