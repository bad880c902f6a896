#include "ncopt/rates.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ncopt {

PowerSplit PowerSplit::from_snr(double rho_m, std::vector<double> rho_i) {
  PowerSplit split;
  split.rho_m = rho_m;
  split.rho_i = std::move(rho_i);
  split.rho_u = std::accumulate(split.rho_i.begin(), split.rho_i.end(), 0.0);
  split.rho = split.rho_m + split.rho_u;
  split.validate();
  return split;
}

PowerSplit PowerSplit::from_watts(double p_watts, double noise_watts,
                                  double beta_m, std::span<const double> p_i_watts) {
  if (!(noise_watts > 0.0)) throw std::invalid_argument("split: noise power must be > 0");
  if (!(beta_m >= 0.0 && beta_m <= 1.0))
    throw std::invalid_argument("split: beta_m must lie in [0, 1]");
  const double total_unicast =
      std::accumulate(p_i_watts.begin(), p_i_watts.end(), 0.0);
  if (std::abs(total_unicast - p_watts) > 1e-9 * std::max(1.0, p_watts))
    throw std::invalid_argument("split: per-user powers must sum to the total power");

  std::vector<double> rho_i(p_i_watts.size());
  const double beta_u = 1.0 - beta_m;
  for (std::size_t i = 0; i < rho_i.size(); ++i)
    rho_i[i] = beta_u * p_i_watts[i] / noise_watts;
  return from_snr(beta_m * p_watts / noise_watts, std::move(rho_i));
}

void PowerSplit::validate() const {
  if (rho_i.empty()) throw std::invalid_argument("split: need at least one user");
  if (!(rho_m >= 0.0)) throw std::invalid_argument("split: rho_m must be >= 0");
  double sum = 0.0;
  for (double r : rho_i) {
    if (!(r >= 0.0)) throw std::invalid_argument("split: per-user SNRs must be >= 0");
    sum += r;
  }
  const double scale = std::max(1.0, rho);
  if (std::abs(sum - rho_u) > 1e-9 * scale)
    throw std::invalid_argument("split: rho_i must sum to rho_u");
  if (std::abs(rho_m + rho_u - rho) > 1e-9 * scale)
    throw std::invalid_argument("split: rho_m + rho_u must equal rho");
}

double multicast_rate(const PowerSplit& split, double lambda_i,
                      const CsiCoefficients& coeffs) {
  return std::log2(1.0 + split.rho_m * lambda_i /
                             (split.rho_u * lambda_i + coeffs.psi));
}

double unicast_rate_exact(const PowerSplit& split, std::size_t user,
                          double lambda_i, double a, double b) {
  if (user >= split.rho_i.size())
    throw std::out_of_range("unicast_rate_exact: user index out of range");
  double interference = 0.0;
  double leakage = split.rho_i[user] * b;
  for (std::size_t j = 0; j < user; ++j) {
    interference += split.rho_i[j] * lambda_i;
    leakage += split.rho_i[j] * b;
  }
  return std::log2(1.0 + split.rho_i[user] * lambda_i /
                             (interference + leakage + a));
}

double unicast_rate_relaxed(const PowerSplit& split, std::size_t user,
                            double lambda_i, double psi) {
  if (user >= split.rho_i.size())
    throw std::out_of_range("unicast_rate_relaxed: user index out of range");
  double interference = 0.0;
  for (std::size_t j = 0; j < user; ++j) interference += split.rho_i[j] * lambda_i;
  return std::log2(1.0 + split.rho_i[user] * lambda_i / (interference + psi));
}

}  // namespace ncopt
