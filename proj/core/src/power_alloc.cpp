#include "ncopt/power_alloc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncopt/errors.hpp"

namespace ncopt {

namespace {

void check_inputs(double r_min, std::span<const double> lambda, double psi) {
  if (!(r_min >= 0.0) || !std::isfinite(r_min))
    throw std::domain_error("min power: r_min must be finite and >= 0");
  if (lambda.empty()) throw std::invalid_argument("min power: need at least one user");
  for (double l : lambda)
    if (!(l > 0.0)) throw std::domain_error("min power: every lambda must be > 0");
  if (!(psi > 0.0)) throw std::domain_error("min power: psi must be > 0");
}

}  // namespace

MinPowerProfile min_power_recurrence(double r_min, std::span<const double> lambda,
                                     double psi) {
  check_inputs(r_min, lambda, psi);
  MinPowerProfile profile;
  profile.r_min = r_min;
  profile.rho_i_min.resize(lambda.size());

  const double theta = std::exp2(r_min) - 1.0;
  double prefix = 0.0;  // sum of rho_j_min over already-fixed stronger users
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    profile.rho_i_min[i] = theta * (prefix + psi / lambda[i]);
    prefix += profile.rho_i_min[i];
  }
  profile.rho_sum_min = prefix;
  return profile;
}

MinPowerProfile min_power_closed_form(double r_min, std::span<const double> lambda,
                                      double psi) {
  MinPowerProfile profile = min_power_recurrence(r_min, lambda, psi);
  const std::size_t k = lambda.size();
  const double theta = std::exp2(r_min) - 1.0;
  double sum = 0.0;
  // Weakest user carries weight 2^0, the strongest 2^{(K-1) r_min}.
  for (std::size_t i = 0; i < k; ++i)
    sum += std::exp2(static_cast<double>(i) * r_min) * psi / lambda[k - 1 - i];
  profile.rho_sum_min = theta * sum;
  return profile;
}

ExcessProfile excess_transform(std::span<const double> delta_rho,
                               const MinPowerProfile& profile,
                               std::span<const double> lambda, double psi) {
  const std::size_t k = lambda.size();
  if (delta_rho.size() != k || profile.rho_i_min.size() != k)
    throw std::invalid_argument("excess: inconsistent vector lengths");
  for (double d : delta_rho)
    if (!(d >= 0.0)) throw std::domain_error("excess: delta_rho must be >= 0");

  ExcessProfile excess;
  excess.delta_rho.assign(delta_rho.begin(), delta_rho.end());
  excess.rho_e.resize(k);
  excess.n_e.resize(k);
  excess.delta_r.resize(k);

  const double theta = std::exp2(profile.r_min) - 1.0;
  double delta_prefix = 0.0;  // sum of delta_rho over stronger users
  double min_prefix = 0.0;    // sum of rho_j_min including user i
  double rho_e_prefix = 0.0;  // transformed interference
  for (std::size_t i = 0; i < k; ++i) {
    const double scale = std::exp2(static_cast<double>(k - 1 - i) * profile.r_min);
    min_prefix += profile.rho_i_min[i];
    excess.rho_e[i] = (delta_rho[i] - theta * delta_prefix) * scale;
    excess.n_e[i] = (psi / lambda[i] + min_prefix) * scale;
    excess.delta_r[i] =
        std::log2(1.0 + excess.rho_e[i] / (excess.n_e[i] + rho_e_prefix));
    excess.sum_delta_r += excess.delta_r[i];
    delta_prefix += delta_rho[i];
    rho_e_prefix += excess.rho_e[i];
  }
  return excess;
}

double optimal_excess_rate(double rho_u, const MinPowerProfile& profile,
                           double lambda_0, double psi, std::size_t user_count,
                           double r_min) {
  if (!(lambda_0 > 0.0)) throw std::domain_error("excess: lambda_0 must be > 0");
  const double excess = rho_u - profile.rho_sum_min;
  if (excess < 0.0) {
    std::ostringstream msg;
    msg << "unicast budget " << rho_u << " below the minimum-rate requirement "
        << profile.rho_sum_min;
    throw InfeasibleError(InfeasibleKind::Rate, msg.str(), profile.rho_sum_min);
  }
  const double k_scale = std::exp2(static_cast<double>(user_count) * r_min);
  return std::log2(1.0 + excess * lambda_0 / (psi * k_scale));
}

std::vector<double> optimal_excess_split(double rho_u,
                                         const MinPowerProfile& profile,
                                         double r_min) {
  if (profile.rho_i_min.empty())
    throw std::invalid_argument("excess: empty minimum-power profile");
  const double excess = rho_u - profile.rho_sum_min;
  if (excess < 0.0) {
    std::ostringstream msg;
    msg << "unicast budget " << rho_u << " below the minimum-rate requirement "
        << profile.rho_sum_min;
    throw InfeasibleError(InfeasibleKind::Rate, msg.str(), profile.rho_sum_min);
  }
  const std::size_t k = profile.rho_i_min.size();
  const double theta = std::exp2(r_min) - 1.0;
  std::vector<double> delta(k, 0.0);
  delta[0] = excess / std::exp2(static_cast<double>(k - 1) * r_min);
  double prefix = delta[0];
  for (std::size_t i = 1; i < k; ++i) {
    delta[i] = theta * prefix;
    prefix += delta[i];
  }
  return delta;
}

}  // namespace ncopt
