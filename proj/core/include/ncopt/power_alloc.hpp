#pragma once

#include <span>
#include <vector>

namespace ncopt {

// Minimum unicast power budget: the per-user SNRs that pin every user's
// relaxed rate at exactly r_min, and their total.
struct MinPowerProfile {
  double r_min = 0.0;
  std::vector<double> rho_i_min;  // strongest user first
  double rho_sum_min = 0.0;
};

// Forward recurrence, user 0 (strongest, interference-free) first:
//   rho_i_min = (2^r_min - 1) * (sum_{j<i} rho_j_min + psi / lambda_i).
// This is the defining construction: plugging the result back into the
// relaxed rate yields exactly r_min for every user.
MinPowerProfile min_power_recurrence(double r_min, std::span<const double> lambda,
                                     double psi);

// Same per-user values, with the total taken from the closed form
//   rho_sum_min = (2^r_min - 1) * sum_{i=0}^{K-1} 2^{i r_min} * psi / lambda_{K-1-i}.
// Note the psi factor: the psi-free variant of this sum is correct only
// for psi == 1; the recurrence is the ground truth the closed form is
// validated against.
MinPowerProfile min_power_closed_form(double r_min, std::span<const double> lambda,
                                      double psi);

// Excess-power coordinates. With rho_i = rho_i_min + delta_rho_i, each
// user's relaxed rate decomposes as r_min + delta_r_i where
//   rho_e_i = (delta_rho_i - (2^r_min - 1) sum_{j<i} delta_rho_j) * 2^{(K-1-i) r_min}
//   n_e_i   = (psi / lambda_i + sum_{j<=i} rho_j_min) * 2^{(K-1-i) r_min}
//   delta_r_i = log2(1 + rho_e_i / (n_e_i + sum_{j<i} rho_e_j)).
// The transformed excesses satisfy sum_i rho_e_i == sum_i delta_rho_i, so
// the excess budget is preserved. delta_r_i may be negative when a raw
// split starves a weaker user below r_min.
struct ExcessProfile {
  std::vector<double> delta_rho;
  std::vector<double> rho_e;
  std::vector<double> n_e;
  std::vector<double> delta_r;
  double sum_delta_r = 0.0;
};

ExcessProfile excess_transform(std::span<const double> delta_rho,
                               const MinPowerProfile& profile,
                               std::span<const double> lambda, double psi);

// Best achievable sum of rate deltas for a given unicast budget: all
// transformed excess goes to the strongest user,
//   log2(1 + (rho_u - rho_sum_min) * lambda_0 / (psi * 2^{K r_min})).
// Throws InfeasibleError{Rate} when rho_u < rho_sum_min.
double optimal_excess_rate(double rho_u, const MinPowerProfile& profile,
                           double lambda_0, double psi, std::size_t user_count,
                           double r_min);

// Raw per-user excess realizing that optimum. In raw power the corner is
// not "everything on user 0": each weaker user gets exactly the top-up
// that cancels the added interference and holds it at r_min,
//   delta_rho_0 = (rho_u - rho_sum_min) / 2^{(K-1) r_min},
//   delta_rho_i = (2^r_min - 1) * sum_{j<i} delta_rho_j   for i >= 1,
// which sums back to rho_u - rho_sum_min. Throws InfeasibleError{Rate}
// when rho_u < rho_sum_min.
std::vector<double> optimal_excess_split(double rho_u,
                                         const MinPowerProfile& profile,
                                         double r_min);

}  // namespace ncopt
