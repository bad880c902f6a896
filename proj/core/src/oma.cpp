#include "ncopt/oma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncopt/errors.hpp"

namespace ncopt {

OmaAllocation oma_rates(const ProblemInstance& instance) {
  instance.validate();
  const std::size_t k = instance.user_count();
  const double rho = instance.rho;
  const double psi = instance.coeffs.psi;  // full-power noise-plus-error term

  // Spectral efficiency of a dedicated slot at full SNR.
  std::vector<double> unit_rate(k);
  for (std::size_t i = 0; i < k; ++i)
    unit_rate[i] = std::log2(1.0 + rho * instance.lambda[i] / psi);

  OmaAllocation oma;
  oma.alpha.assign(k, 0.0);
  oma.rates.r_m.assign(k, 0.0);
  oma.rates.r_u.assign(k, 0.0);

  // Smallest multicast fraction meeting the outage target for every user;
  // the weakest average gain binds.
  if (instance.qos.r_target > 0.0) {
    const double omega_k = instance.gains[k - 1];
    const double denom = std::log2(
        1.0 - rho * omega_k * std::log1p(-instance.qos.delta_out) / psi);
    oma.alpha_m = instance.qos.r_target / denom;
  }

  // Smallest per-user fractions meeting r_min.
  double used = oma.alpha_m;
  for (std::size_t i = 0; i < k; ++i) {
    if (instance.r_min > 0.0) {
      if (!(unit_rate[i] > 0.0))
        throw InfeasibleError(InfeasibleKind::Rate,
                              "oma: a user cannot reach r_min at full power");
      oma.alpha[i] = instance.r_min / unit_rate[i];
    }
    used += oma.alpha[i];
  }
  if (used > 1.0) {
    std::ostringstream msg;
    msg << "oma: minimal time fractions sum to " << used;
    throw InfeasibleError(InfeasibleKind::Rate, msg.str(), used);
  }

  oma.policy = solve_cache_subproblem(instance.catalog, instance.cache_capacity);
  const double r_eff = effective_backhaul(instance.backhaul, oma.policy.miss);
  const double base_rate = static_cast<double>(k) * instance.r_min;
  if (r_eff < base_rate) {
    std::ostringstream msg;
    msg << "oma: effective backhaul " << r_eff << " below the minimum-rate load "
        << base_rate;
    throw InfeasibleError(InfeasibleKind::Backhaul, msg.str(), r_eff);
  }

  // Leftover time to the strongest user, capped by the backhaul ceiling.
  double extra = 0.0;
  if (unit_rate[0] > 0.0) {
    extra = (1.0 - used) * unit_rate[0];
    if (std::isfinite(r_eff)) extra = std::min(extra, r_eff - base_rate);
    oma.alpha[0] += extra / unit_rate[0];
  }

  for (std::size_t i = 0; i < k; ++i) {
    oma.rates.r_m[i] = oma.alpha_m * unit_rate[i];
    oma.rates.r_u[i] = oma.alpha[i] * unit_rate[i];
    oma.sum_rate += oma.rates.r_u[i];
  }
  return oma;
}

}  // namespace ncopt
