#include "ncopt/outage.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ncopt/errors.hpp"
#include "ncopt/rng.hpp"

namespace ncopt {

double MulticastQos::theta() const { return std::exp2(r_target) - 1.0; }

void MulticastQos::validate() const {
  if (!(r_target >= 0.0) || !std::isfinite(r_target))
    throw std::domain_error("qos: r_target must be finite and >= 0");
  if (!(delta_out > 0.0 && delta_out < 1.0))
    throw std::domain_error("qos: delta_out must lie strictly inside (0, 1)");
}

double outage_closed_form(const MulticastQos& qos, const PowerSplit& split,
                          double omega_i, double psi) {
  if (!(omega_i > 0.0)) throw std::domain_error("outage: omega_i must be > 0");
  const double theta = qos.theta();
  if (theta == 0.0) return 0.0;  // zero target rate is always met
  const double margin = split.rho_m - theta * split.rho_u;
  // Outside the validity region no gain realization reaches the target.
  if (!(margin > 0.0)) return 1.0;
  return 1.0 - std::exp(-psi * theta / (margin * omega_i));
}

double outage_monte_carlo(const MulticastQos& qos, const PowerSplit& split,
                          double omega_i, const CsiCoefficients& coeffs,
                          std::size_t n_trials, std::uint64_t seed) {
  if (n_trials == 0) throw std::invalid_argument("outage_mc: n_trials must be >= 1");
  Rng rng(seed);
  std::size_t outages = 0;
  for (std::size_t t = 0; t < n_trials; ++t) {
    const double lambda = rng.exponential(omega_i);
    if (multicast_rate(split, lambda, coeffs) < qos.r_target) ++outages;
  }
  return static_cast<double>(outages) / static_cast<double>(n_trials);
}

OutagePowerBound outage_power_bound(const MulticastQos& qos,
                                    const UserGains& omega, double psi,
                                    double rho) {
  qos.validate();
  if (!(psi > 0.0)) throw std::domain_error("outage bound: psi must be > 0");
  if (!(rho >= 0.0)) throw std::domain_error("outage bound: rho must be >= 0");

  const double theta = qos.theta();
  const double pow_rm = std::exp2(qos.r_target);
  const double log_term = std::log1p(-qos.delta_out);  // ln(1 - delta) < 0

  OutagePowerBound result;
  result.per_user.resize(omega.size());
  result.bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double user_bound = psi * theta / (pow_rm * omega[i] * log_term) + rho / pow_rm;
    result.per_user[i] = user_bound;
    if (user_bound < result.bound) {
      result.bound = user_bound;
      result.binding_user = i;
    }
  }
  if (!(result.bound > 0.0)) {
    std::ostringstream msg;
    msg << "multicast outage target unreachable: max admissible rho_u = "
        << result.bound;
    throw InfeasibleError(InfeasibleKind::Multicast, msg.str(), result.bound);
  }
  return result;
}

}  // namespace ncopt
